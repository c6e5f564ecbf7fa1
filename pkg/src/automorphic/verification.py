"""Sweeps that check the structural properties of idempotent residues over
grids of bases and widths."""
import logging
from itertools import combinations
from math import gcd, prod
from typing import Callable, List, Tuple

from automorphic.census import (
    count_exact_width,
    twin_digit_audit,
    twin_digit_complement,
)
from automorphic.engine import (
    ORACLE_CEILING,
    brute_force_idempotents,
    closed_form_base10,
    enumerate_idempotents,
    enumerate_twin_pairs,
    inverse_of_five_mod_pow2,
    solve_selector,
    twin_of,
)
from automorphic.errors import InvariantViolationError
from automorphic.factorization import factor_base, prime_power_moduli
from automorphic.modular import mod_inverse

logger = logging.getLogger(__name__)


def _require(condition: bool, message: str, *args: object) -> None:
    if not condition:
        raise InvariantViolationError(message.format(*args))


def _check_moduli(base: int, n: int, oracle_ceiling: int) -> None:
    values = prime_power_moduli(factor_base(base), n)
    _require(
        prod(values) == base ** n,
        'moduli multiply to {} instead of {}', prod(values), base ** n
    )
    for first, second in combinations(values, 2):
        _require(
            gcd(first, second) == 1,
            'moduli {} and {} share a factor', first, second
        )


def _check_enumeration(base: int, n: int, oracle_ceiling: int) -> None:
    modulus = base ** n
    expected_count = 2 ** factor_base(base).m
    solutions = enumerate_idempotents(base, n, include_trivial=True)
    residues = [int(s.residue) for s in solutions]
    _require(
        len(residues) == expected_count,
        'found {} solutions instead of {}', len(residues), expected_count
    )
    _require(
        len(set(residues)) == len(residues),
        'residues {} are not distinct', residues
    )
    _require(residues == sorted(residues), 'residues are not sorted')
    for solution in solutions:
        x = int(solution.residue)
        _require((x * x - x) % modulus == 0, '{} is not idempotent', x)
        _require(
            solution.digits.value == x,
            'digits {} do not evaluate to {}', solution.digits, x
        )
    trivial = sorted(int(s.residue) for s in solutions if s.is_trivial)
    _require(trivial == [0, 1], 'trivial solutions are {}', trivial)


def _check_oracle(base: int, n: int, oracle_ceiling: int) -> None:
    if base ** n > oracle_ceiling:
        logger.debug(
            'skip exhaustive scan for B={} n={} above ceiling {}'.format(
                base, n, oracle_ceiling
            )
        )
        return
    expected = set(brute_force_idempotents(base, n, ceiling=oracle_ceiling))
    found = {int(s.residue) for s in enumerate_idempotents(base, n)}
    _require(
        found == expected,
        'enumeration and exhaustive scan differ by {}',
        sorted(found ^ expected)
    )


def _check_twins(base: int, n: int, oracle_ceiling: int) -> None:
    m = factor_base(base).m
    pairs = enumerate_twin_pairs(base, n)
    _require(
        len(pairs) == 2 ** (m - 1) - 1,
        'found {} twin pairs instead of {}', len(pairs), 2 ** (m - 1) - 1
    )
    for pair in pairs:
        _require(
            twin_of(pair.r) == pair.s and twin_of(pair.s) == pair.r,
            'twin of {} is not an involution', int(pair.r.residue)
        )
        total = int(pair.r.residue) + int(pair.s.residue)
        _require(
            total == base ** n + 1,
            'twins {} add up to {} instead of {}', pair, total, base ** n + 1
        )
        twin_digit_complement(pair)
        if n >= 2:
            twin_digit_audit(pair)


def _check_census(base: int, n: int, oracle_ceiling: int) -> None:
    count_exact_width(base, n)


def _check_prefixes(base: int, n: int, oracle_ceiling: int) -> None:
    factorization = factor_base(base)
    for solution in enumerate_idempotents(base, n):
        for k in range(1, n):
            shorter = solve_selector(factorization, k, solution.selector)
            _require(
                int(solution.residue) % base ** k == int(shorter.residue),
                'class {} at width {} does not reduce to width {}',
                solution.selector, n, k
            )


def _check_base10(base: int, n: int, oracle_ceiling: int) -> None:
    if base != 10 or n < 2:
        return
    factorization = factor_base(base)
    r, s = closed_form_base10(n)
    r_crt = int(solve_selector(factorization, n, (1, 0)).residue)
    s_crt = int(solve_selector(factorization, n, (0, 1)).residue)
    _require(
        (int(r), int(s)) == (r_crt, s_crt),
        'closed form ({}, {}) disagrees with CRT ({}, {})',
        int(r), int(s), r_crt, s_crt
    )
    inverse = int(inverse_of_five_mod_pow2(n))
    expected = int(mod_inverse(5, 2 ** n))
    _require(
        inverse == expected,
        'inverse of 5 modulo 2^{} is {} instead of {}', n, inverse, expected
    )


CHECKS: List[Tuple[str, Callable[[int, int, int], None]]] = [
    ('prime-power-moduli', _check_moduli),
    ('enumeration', _check_enumeration),
    ('oracle', _check_oracle),
    ('twins', _check_twins),
    ('census', _check_census),
    ('prefix-coherence', _check_prefixes),
    ('base10-closed-form', _check_base10),
]
"""Named checks that are run for every cell of a sweep."""


def check_cell(
        base: int,
        n: int,
        oracle_ceiling: int = ORACLE_CEILING
    ) -> List[str]:
    """Checks every structural property for a single base and width.

    Parameters
    ----------
    base: int
        Number base (at least 2)
    n: int
        Number of digits (positive)
    oracle_ceiling: int, optional
        Largest modulus that gets compared against an exhaustive scan

    Returns
    -------
    List[str]
        Description of every violated property, prefixed with the name of
        the check and the cell; empty if all properties hold

    Raises
    ------
    automorphic.errors.DomainError
        When `base` or `n` lies outside the domain of the checks

    """
    logger.info('verify B={} n={}'.format(base, n))
    violations = []
    for name, check in CHECKS:
        try:
            check(base, n, oracle_ceiling)
        except InvariantViolationError as error:
            message = '[B={} n={}] {}: {}'.format(base, n, name, error)
            logger.warning(message)
            violations.append(message)
    return violations

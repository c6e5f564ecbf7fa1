"""Idempotent residues modulo powers of a number base.

A residue ``x`` is idempotent modulo ``B ** n`` if ``x * x = x`` modulo
``B ** n``. Writing ``B = p_1 ** e_1 * ... * p_m ** e_m``, every idempotent
solves exactly one system ``x = t_i (mod p_i ** (n * e_i))`` with
``t_i`` in ``{0, 1}``, so there are exactly ``2 ** m`` of them. The tuple
``(t_1, ..., t_m)`` is called the selector of the solution.

"""
import itertools
import logging
from typing import Iterable, Iterator, List, Tuple

import numpy as np

from automorphic.digits import DigitString, to_digits
from automorphic.errors import (
    DomainError,
    InvariantViolationError,
    OracleTooLargeError,
)
from automorphic.factorization import (
    Factorization,
    factor_base,
    prime_power_moduli,
)
from automorphic.modular import (
    CongruenceSystem,
    Residue,
    crt_combine,
    mod_pow,
)

logger = logging.getLogger(__name__)


ORACLE_CEILING = 10 ** 7
"""Largest modulus for which the exhaustive residue scan is performed."""

# x * (x - 1) must not overflow a signed 64-bit integer in the vectorized scan
_VECTORIZED_SCAN_LIMIT = 3 * 10 ** 9
_SCAN_CHUNK_SIZE = 2 ** 20


def is_idempotent(x: int, modulus: int) -> bool:
    """Determines whether ``x * x = x`` modulo `modulus`.

    Parameters
    ----------
    x: int
        Integer
    modulus: int
        Modulus

    Returns
    -------
    bool
        Whether `modulus` divides ``x * (x - 1)``

    """
    return (x * (x - 1)) % modulus == 0


class SelectorTuple(tuple):

    """Choice of residue 0 or 1 for each prime power congruence.

    Coordinate ``i`` corresponds to the ``i``-th prime of the governing
    factorization in ascending order.

    """

    def __new__(cls, bits: Iterable[int]) -> 'SelectorTuple':
        """
        Parameters
        ----------
        bits: Iterable[int]
            Values 0 or 1

        Raises
        ------
        automorphic.errors.DomainError
            When there are no bits or a bit is neither 0 nor 1

        """
        values = tuple(int(b) for b in bits)
        if len(values) == 0:
            raise DomainError('Selector must have at least one bit.')
        if any(b not in (0, 1) for b in values):
            raise DomainError(
                'Selector bits must be 0 or 1, got {}.'.format(values)
            )
        return super().__new__(cls, values)

    def __repr__(self) -> str:
        return '{}({})'.format(self.__class__.__name__, list(self))

    def __str__(self) -> str:
        return '({})'.format(','.join(str(b) for b in self))

    @classmethod
    def iter_all(cls, m: int) -> Iterator['SelectorTuple']:
        """Iterates over all ``2 ** m`` selectors in lexicographic order.

        Parameters
        ----------
        m: int
            Number of distinct primes

        Returns
        -------
        Iterator[automorphic.engine.SelectorTuple]
            Selectors from all zeros to all ones

        """
        for bits in itertools.product((0, 1), repeat=m):
            yield cls(bits)

    @property
    def bits(self) -> Tuple[int, ...]:
        """Tuple[int, ...]: selector values"""
        return tuple(self)

    @property
    def is_trivial(self) -> bool:
        """bool: whether all bits are equal (solutions 0 and 1)"""
        return len(set(self)) == 1

    def complement(self) -> 'SelectorTuple':
        """Swaps zeros for ones and ones for zeros.

        Returns
        -------
        automorphic.engine.SelectorTuple
            Complementary selector

        """
        return self.__class__(1 - b for b in self)


class IdempotentSolution(object):

    """Idempotent residue modulo ``base ** width_n`` together with the
    selector of the congruence system it solves."""

    def __init__(
            self,
            base: int,
            width_n: int,
            residue: int,
            selector: Iterable[int]
        ) -> None:
        """
        Parameters
        ----------
        base: int
            Number base (at least 2)
        width_n: int
            Number of digits (positive)
        residue: int
            Idempotent residue in the range [0, base ** width_n)
        selector: Iterable[int]
            Selector of the congruence system `residue` solves

        Raises
        ------
        automorphic.errors.DomainError
            When `residue` is out of range, not idempotent or does not match
            `selector`

        """
        if width_n < 1:
            raise DomainError(
                'Width must be positive, got {}.'.format(width_n)
            )
        factorization = factor_base(base)
        modulus = base ** width_n
        residue = int(residue)
        if not 0 <= residue < modulus:
            raise DomainError(
                'Residue {} is out of range for modulus {}.'.format(
                    residue, modulus
                )
            )
        if not is_idempotent(residue, modulus):
            raise DomainError(
                'Residue {} is not idempotent modulo {}.'.format(
                    residue, modulus
                )
            )
        selector = SelectorTuple(selector)
        if len(selector) != factorization.m:
            raise DomainError(
                'Selector {} has {} bits, base {} has {} distinct '
                'primes.'.format(
                    selector, len(selector), base, factorization.m
                )
            )
        moduli = prime_power_moduli(factorization, width_n)
        for bit, prime_power in zip(selector, moduli):
            if residue % prime_power != bit:
                raise DomainError(
                    'Residue {} does not match selector {} modulo {}.'.format(
                        residue, selector, prime_power
                    )
                )
        self._base = base
        self._width_n = width_n
        self._residue = residue
        self._selector = selector
        self._digits = to_digits(residue, base, width_n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdempotentSolution):
            return NotImplemented
        return (
            self._base == other._base and
            self._width_n == other._width_n and
            self._residue == other._residue
        )

    def __hash__(self) -> int:
        return hash((self._base, self._width_n, self._residue))

    def __repr__(self) -> str:
        return '{}(base={}, width_n={}, residue={}, selector={})'.format(
            self.__class__.__name__,
            self._base,
            self._width_n,
            self._residue,
            list(self._selector)
        )

    @property
    def base(self) -> int:
        """int: number base"""
        return self._base

    @property
    def width_n(self) -> int:
        """int: number of digits"""
        return self._width_n

    @property
    def modulus(self) -> int:
        """int: ``base ** width_n``"""
        return self._base ** self._width_n

    @property
    def residue(self) -> Residue:
        """automorphic.modular.Residue: idempotent residue"""
        return Residue(self._residue, self.modulus)

    @property
    def selector(self) -> SelectorTuple:
        """automorphic.engine.SelectorTuple: selector of the solution's
        class"""
        return self._selector

    @property
    def digits(self) -> DigitString:
        """automorphic.digits.DigitString: zero-padded digits of the residue
        in the number base"""
        return self._digits

    @property
    def is_trivial(self) -> bool:
        """bool: whether the solution is 0 or 1"""
        return self._selector.is_trivial


class TwinPair(object):

    """Two non-trivial solutions of the same width with complementary
    selectors, whose residues add up to ``base ** width_n + 1``."""

    def __init__(
            self,
            r: IdempotentSolution,
            s: IdempotentSolution
        ) -> None:
        """
        Parameters
        ----------
        r: automorphic.engine.IdempotentSolution
            First solution
        s: automorphic.engine.IdempotentSolution
            Second solution

        Raises
        ------
        automorphic.errors.DomainError
            When the solutions are trivial, differ in base or width, or
            their selectors are not complementary
        automorphic.errors.InvariantViolationError
            When the residues do not add up to ``base ** width_n + 1``

        """
        if r.base != s.base or r.width_n != s.width_n:
            raise DomainError(
                'Twins must share base and width, got (B={}, n={}) and '
                '(B={}, n={}).'.format(r.base, r.width_n, s.base, s.width_n)
            )
        if r.is_trivial or s.is_trivial:
            raise DomainError('Twins must be non-trivial solutions.')
        if r.selector.complement() != s.selector:
            raise DomainError(
                'Selectors {} and {} are not complementary.'.format(
                    r.selector, s.selector
                )
            )
        if int(r.residue) + int(s.residue) != r.modulus + 1:
            raise InvariantViolationError(
                'twin residues {} and {} do not add up to {}'.format(
                    r.residue, s.residue, r.modulus + 1
                ),
                base=r.base,
                width=r.width_n
            )
        self._r = r
        self._s = s

    def __iter__(self) -> Iterator[IdempotentSolution]:
        return iter((self._r, self._s))

    def __repr__(self) -> str:
        return '{}(r={}, s={})'.format(
            self.__class__.__name__, int(self._r.residue), int(self._s.residue)
        )

    @property
    def r(self) -> IdempotentSolution:
        """automorphic.engine.IdempotentSolution: first solution"""
        return self._r

    @property
    def s(self) -> IdempotentSolution:
        """automorphic.engine.IdempotentSolution: second solution"""
        return self._s

    @property
    def base(self) -> int:
        """int: number base"""
        return self._r.base

    @property
    def width_n(self) -> int:
        """int: number of digits"""
        return self._r.width_n


def solve_selector(
        factorization: Factorization,
        n: int,
        selector: Iterable[int]
    ) -> IdempotentSolution:
    """Solves the congruence system of a selector.

    Parameters
    ----------
    factorization: automorphic.factorization.Factorization
        Factorization of the base
    n: int
        Number of digits (positive)
    selector: Iterable[int]
        One bit per prime of `factorization`

    Returns
    -------
    automorphic.engine.IdempotentSolution
        Unique solution in ``[0, base ** n)``

    Raises
    ------
    automorphic.errors.DomainError
        When the length of `selector` differs from the number of primes

    """
    selector = SelectorTuple(selector)
    if len(selector) != factorization.m:
        raise DomainError(
            'Selector {} has {} bits, expected {}.'.format(
                selector, len(selector), factorization.m
            )
        )
    moduli = prime_power_moduli(factorization, n)
    residue = crt_combine(CongruenceSystem(zip(selector, moduli)))
    logger.debug(
        'solved selector {} for B={} n={}: {}'.format(
            selector, factorization.base, n, int(residue)
        )
    )
    return IdempotentSolution(factorization.base, n, residue, selector)


def enumerate_idempotents(
        base: int,
        n: int,
        include_trivial: bool = True
    ) -> List[IdempotentSolution]:
    """Enumerates all idempotent residues modulo ``base ** n``.

    Parameters
    ----------
    base: int
        Number base (at least 2)
    n: int
        Number of digits (positive)
    include_trivial: bool, optional
        Whether the trivial solutions 0 and 1 should be included

    Returns
    -------
    List[automorphic.engine.IdempotentSolution]
        ``2 ** m`` solutions (``2 ** m - 2`` without the trivial ones)
        sorted by residue

    """
    factorization = factor_base(base)
    solutions = [
        solve_selector(factorization, n, selector)
        for selector in SelectorTuple.iter_all(factorization.m)
    ]
    if not include_trivial:
        solutions = [s for s in solutions if not s.is_trivial]
    return sorted(solutions, key=lambda s: int(s.residue))


def enumerate_twin_pairs(base: int, n: int) -> List[TwinPair]:
    """Enumerates the ``2 ** (m - 1) - 1`` non-trivial twin pairs modulo
    ``base ** n``.

    The member whose selector has a one in the coordinate of the smallest
    prime is ``r``, its twin is ``s``. For base 10 these are the solutions
    ending in 5 and 6, respectively.

    Parameters
    ----------
    base: int
        Number base (at least 2)
    n: int
        Number of digits (positive)

    Returns
    -------
    List[automorphic.engine.TwinPair]
        Twin pairs sorted by the residue of ``r`` (empty for prime power
        bases)

    """
    factorization = factor_base(base)
    pairs = []
    for selector in SelectorTuple.iter_all(factorization.m):
        if selector.is_trivial or selector[0] != 1:
            continue
        pairs.append(
            TwinPair(
                solve_selector(factorization, n, selector),
                solve_selector(factorization, n, selector.complement())
            )
        )
    return sorted(pairs, key=lambda p: int(p.r.residue))


def twin_of(solution: IdempotentSolution) -> IdempotentSolution:
    """Computes the solution with the complementary selector.

    Parameters
    ----------
    solution: automorphic.engine.IdempotentSolution
        Non-trivial solution

    Returns
    -------
    automorphic.engine.IdempotentSolution
        Twin of `solution`, the two residues add up to
        ``base ** width_n + 1``

    Raises
    ------
    automorphic.errors.DomainError
        When `solution` is trivial

    """
    if solution.is_trivial:
        raise DomainError(
            'Trivial solution {} has no non-trivial twin.'.format(
                int(solution.residue)
            )
        )
    twin = solve_selector(
        factor_base(solution.base),
        solution.width_n,
        solution.selector.complement()
    )
    TwinPair(solution, twin)
    return twin


def extend_solution(
        solution: IdempotentSolution,
        n_new: int
    ) -> IdempotentSolution:
    """Lifts a solution to a larger width within the same selector class.

    The lifted solution pads digits on the left of `solution`, i.e., it is
    congruent to `solution` modulo ``base ** width_n``.

    Parameters
    ----------
    solution: automorphic.engine.IdempotentSolution
        Solution that should be extended
    n_new: int
        New number of digits, larger than ``solution.width_n``

    Returns
    -------
    automorphic.engine.IdempotentSolution
        Solution of width `n_new` with the same selector

    Raises
    ------
    automorphic.errors.DomainError
        When `n_new` is not larger than the width of `solution`
    automorphic.errors.InvariantViolationError
        When the lifted solution does not reduce to `solution`

    """
    if n_new <= solution.width_n:
        raise DomainError(
            'New width {} must exceed current width {}.'.format(
                n_new, solution.width_n
            )
        )
    extended = solve_selector(
        factor_base(solution.base), n_new, solution.selector
    )
    if int(extended.residue) % solution.modulus != int(solution.residue):
        raise InvariantViolationError(
            'width-{} solution {} does not reduce to {}'.format(
                n_new, int(extended.residue), int(solution.residue)
            ),
            base=solution.base,
            width=solution.width_n
        )
    return extended


def inverse_of_five_mod_pow2(n: int) -> Residue:
    """Computes the inverse of 5 modulo ``2 ** n`` as
    ``5 ** (2 ** (n - 2) - 1)``.

    Parameters
    ----------
    n: int
        Exponent of the modulus (at least 2)

    Returns
    -------
    automorphic.modular.Residue
        Inverse of 5 modulo ``2 ** n``

    Raises
    ------
    automorphic.errors.DomainError
        When `n` is smaller than 2

    """
    if n < 2:
        raise DomainError('Exponent must be at least 2, got {}.'.format(n))
    return mod_pow(5, 2 ** (n - 2) - 1, 2 ** n)


def closed_form_base10(n: int) -> Tuple[Residue, Residue]:
    """Computes the two non-trivial idempotents modulo ``10 ** n`` in closed
    form.

    The first one is ``5 ** (n * 2 ** (n - 2))`` and the second one is its
    complement ``10 ** n + 1`` minus the first.

    Parameters
    ----------
    n: int
        Number of digits (at least 2)

    Returns
    -------
    Tuple[automorphic.modular.Residue, automorphic.modular.Residue]
        Solution ending in 5 (selector ``(1, 0)``) and solution ending in 6
        (selector ``(0, 1)``)

    Raises
    ------
    automorphic.errors.DomainError
        When `n` is smaller than 2

    """
    if n < 2:
        raise DomainError('Width must be at least 2, got {}.'.format(n))
    modulus = 10 ** n
    r = mod_pow(5, n * 2 ** (n - 2), modulus)
    s = Residue(modulus + 1 - r, modulus)
    return r, s


def base10_nontrivial(n: int) -> Tuple[Residue, Residue]:
    """Returns the two non-trivial idempotents modulo ``10 ** n`` for any
    positive width.

    Width 1 has no closed form and yields 5 and 6 directly.

    Parameters
    ----------
    n: int
        Number of digits (positive)

    Returns
    -------
    Tuple[automorphic.modular.Residue, automorphic.modular.Residue]
        Solution ending in 5 and solution ending in 6

    """
    if n == 1:
        return Residue(5, 10), Residue(6, 10)
    return closed_form_base10(n)


def brute_force_idempotents(
        base: int,
        n: int,
        ceiling: int = ORACLE_CEILING
    ) -> List[int]:
    """Finds all idempotents modulo ``base ** n`` by scanning every residue.

    Serves as an oracle that is independent of the factorization.

    Parameters
    ----------
    base: int
        Number base (at least 2)
    n: int
        Number of digits (positive)
    ceiling: int, optional
        Largest modulus that is scanned

    Returns
    -------
    List[int]
        Idempotent residues in ascending order

    Raises
    ------
    automorphic.errors.OracleTooLargeError
        When ``base ** n`` exceeds `ceiling`

    """
    if base < 2:
        raise DomainError('Base must be at least 2, got {}.'.format(base))
    if n < 1:
        raise DomainError('Width must be positive, got {}.'.format(n))
    modulus = base ** n
    if modulus > ceiling:
        raise OracleTooLargeError(modulus, ceiling)
    if modulus > _VECTORIZED_SCAN_LIMIT:
        return [x for x in range(modulus) if is_idempotent(x, modulus)]
    found: List[int] = []
    for start in range(0, modulus, _SCAN_CHUNK_SIZE):
        x = np.arange(
            start, min(start + _SCAN_CHUNK_SIZE, modulus), dtype=np.int64
        )
        hits = x[(x * (x - 1)) % modulus == 0]
        found.extend(int(v) for v in hits)
    logger.debug(
        'scanned {} residues for B={} n={}: {} idempotents'.format(
            modulus, base, n, len(found)
        )
    )
    return found


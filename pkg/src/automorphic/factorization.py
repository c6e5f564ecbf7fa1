"""Factorization of number bases into prime powers."""
import logging
from functools import lru_cache
from math import isqrt
from typing import Iterator, List, Sequence, Tuple

from automorphic.errors import DomainError, UnsupportedBaseError

logger = logging.getLogger(__name__)


MAX_BASE = 2 ** 32
"""Largest base that gets factored by trial division."""

# Strong probable prime bases that are deterministic below 3.3 * 10**24
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Determines whether `n` is prime.

    Small factors are removed by trial division against the witness primes,
    which are then used as bases of strong probable prime tests. The test is
    deterministic for all values below 3.3 * 10**24, which covers every
    supported base.

    Parameters
    ----------
    n: int
        Integer that should be tested

    Returns
    -------
    bool
        Whether `n` is prime

    """
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


class Factorization(object):

    """Canonical factorization of a number base into powers of distinct
    primes in ascending order.

    The position of a prime in the factorization fixes the coordinate of the
    corresponding bit in every selector tuple.

    """

    def __init__(
            self,
            base: int,
            factors: Sequence[Tuple[int, int]]
        ) -> None:
        """
        Parameters
        ----------
        base: int
            Number base (at least 2)
        factors: Sequence[Tuple[int, int]]
            Pairs of prime and positive exponent, primes strictly ascending

        Raises
        ------
        automorphic.errors.DomainError
            When `factors` does not describe a canonical factorization of
            `base`

        """
        if base < 2:
            raise DomainError('Base must be at least 2, got {}.'.format(base))
        factors = tuple((int(p), int(e)) for p, e in factors)
        if len(factors) == 0:
            raise DomainError('Factorization must have at least one factor.')
        product = 1
        previous = 1
        for prime, exponent in factors:
            if prime <= previous:
                raise DomainError(
                    'Primes must be strictly ascending, got {} after '
                    '{}.'.format(prime, previous)
                )
            if exponent < 1:
                raise DomainError(
                    'Exponent of prime {} must be positive, got {}.'.format(
                        prime, exponent
                    )
                )
            if not is_prime(prime):
                raise DomainError('{} is not a prime.'.format(prime))
            product *= prime ** exponent
            previous = prime
        if product != base:
            raise DomainError(
                'Factors multiply to {} rather than base {}.'.format(
                    product, base
                )
            )
        self._base = base
        self._factors = factors

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self._factors)

    def __len__(self) -> int:
        return len(self._factors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Factorization):
            return NotImplemented
        return self._base == other._base and self._factors == other._factors

    def __hash__(self) -> int:
        return hash((self._base, self._factors))

    def __repr__(self) -> str:
        return '{}({}, {})'.format(
            self.__class__.__name__, self._base, list(self._factors)
        )

    @property
    def base(self) -> int:
        """int: factored number base"""
        return self._base

    @property
    def factors(self) -> List[Tuple[int, int]]:
        """List[Tuple[int, int]]: pairs of prime and exponent"""
        return list(self._factors)

    @property
    def primes(self) -> Tuple[int, ...]:
        """Tuple[int, ...]: distinct primes in ascending order"""
        return tuple(p for p, _ in self._factors)

    @property
    def m(self) -> int:
        """int: number of distinct primes"""
        return len(self._factors)


@lru_cache(maxsize=1024, typed=True)
def factor_base(base: int, max_base: int = MAX_BASE) -> Factorization:
    """Factors a number base by trial division.

    Parameters
    ----------
    base: int
        Number base
    max_base: int, optional
        Largest base that is accepted

    Returns
    -------
    automorphic.factorization.Factorization
        Canonical factorization with primes in ascending order

    Raises
    ------
    TypeError
        When `base` is not an integer
    automorphic.errors.DomainError
        When `base` is smaller than 2
    automorphic.errors.UnsupportedBaseError
        When `base` exceeds `max_base`

    """
    if isinstance(base, bool) or not isinstance(base, int):
        raise TypeError('Base must be an integer.')
    if base < 2:
        raise DomainError('Base must be at least 2, got {}.'.format(base))
    if base > max_base:
        raise UnsupportedBaseError(base, max_base)
    factors = []
    remainder = base
    exponent = 0
    while remainder % 2 == 0:
        remainder //= 2
        exponent += 1
    if exponent > 0:
        factors.append((2, exponent))
    candidate = 3
    limit = isqrt(remainder)
    while candidate <= limit:
        exponent = 0
        while remainder % candidate == 0:
            remainder //= candidate
            exponent += 1
        if exponent > 0:
            factors.append((candidate, exponent))
            limit = isqrt(remainder)
        candidate += 2
    if remainder > 1:
        factors.append((remainder, 1))
    logger.debug('factored base {} into {}'.format(base, factors))
    return Factorization(base, factors)


def prime_power_moduli(factorization: Factorization, n: int) -> List[int]:
    """Computes the pairwise coprime prime power moduli whose product is
    ``B ** n``.

    Parameters
    ----------
    factorization: automorphic.factorization.Factorization
        Factorization of the base `B`
    n: int
        Number of digits (positive)

    Returns
    -------
    List[int]
        ``p ** (n * e)`` for every prime ``p`` with exponent ``e`` in
        factor order

    Raises
    ------
    automorphic.errors.DomainError
        When `n` is not positive

    """
    if n < 1:
        raise DomainError('Width must be positive, got {}.'.format(n))
    return [prime ** (n * exponent) for prime, exponent in factorization]

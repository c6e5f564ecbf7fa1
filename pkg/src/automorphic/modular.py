"""Arbitrary-precision modular arithmetic primitives."""
import logging
from itertools import combinations
from math import gcd
from typing import Iterable, Tuple, Union

from automorphic.errors import (
    DomainError,
    NonCoprimeModuliError,
    NotInvertibleError,
)

logger = logging.getLogger(__name__)


class Residue(int):

    """Integer reduced modulo a modulus.

    Instances behave like plain integers in arithmetic and comparisons and
    additionally remember the modulus they were reduced by. Results of
    arithmetic on a residue are plain integers.

    """

    _modulus: int

    def __new__(cls, value: int, modulus: int) -> 'Residue':
        """
        Parameters
        ----------
        value: int
            Integer that gets reduced, may be negative or exceed `modulus`
        modulus: int
            Modulus (at least 2)

        Raises
        ------
        automorphic.errors.DomainError
            When `modulus` is smaller than 2

        """
        modulus = int(modulus)
        if modulus < 2:
            raise DomainError(
                'Modulus must be at least 2, got {}.'.format(modulus)
            )
        inst = super().__new__(cls, int(value) % modulus)
        inst._modulus = modulus
        return inst

    def __getnewargs__(self) -> Tuple[int, int]:  # type: ignore
        return (int(self), self._modulus)

    def __repr__(self) -> str:
        return '{}({}, modulus={})'.format(
            self.__class__.__name__, int(self), self._modulus
        )

    @property
    def value(self) -> int:
        """int: reduced value in the range [0, modulus)"""
        return int(self)

    @property
    def modulus(self) -> int:
        """int: modulus the value was reduced by"""
        return self._modulus


class CongruenceSystem(list):

    """System of simultaneous congruences ``x = residue (mod modulus)`` with
    pairwise coprime moduli.

    Items are ``(residue, modulus)`` tuples. Residues are reduced by their
    modulus upon construction.

    """

    def __init__(
            self,
            entries: Iterable[Tuple[int, int]] = ()
        ) -> None:
        """
        Parameters
        ----------
        entries: Iterable[Tuple[int, int]]
            Pairs of residue and modulus

        Raises
        ------
        automorphic.errors.DomainError
            When a modulus is smaller than 2
        automorphic.errors.NonCoprimeModuliError
            When two moduli share a common factor

        """
        items = []
        for entry in entries:
            try:
                residue, modulus = entry
            except (TypeError, ValueError):
                raise TypeError(
                    'Items of "{}" must be pairs of residue and '
                    'modulus.'.format(self.__class__.__name__)
                )
            modulus = int(modulus)
            if modulus < 2:
                raise DomainError(
                    'Modulus must be at least 2, got {}.'.format(modulus)
                )
            items.append((int(residue) % modulus, modulus))
        for (_, first), (_, second) in combinations(items, 2):
            divisor = gcd(first, second)
            if divisor != 1:
                raise NonCoprimeModuliError(first, second, divisor)
        super().__init__(items)

    @property
    def moduli(self) -> Tuple[int, ...]:
        """Tuple[int, ...]: moduli in entry order"""
        return tuple(modulus for _, modulus in self)

    @property
    def modulus(self) -> int:
        """int: product of all moduli"""
        product = 1
        for _, modulus in self:
            product *= modulus
        return product

    def is_satisfied_by(self, x: int) -> bool:
        """Determines whether `x` satisfies every congruence of the system.

        Parameters
        ----------
        x: int
            Candidate solution

        Returns
        -------
        bool
            Whether ``x % modulus == residue`` holds for every entry

        """
        return all(x % modulus == residue for residue, modulus in self)


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Extended Euclidean algorithm.

    Parameters
    ----------
    a: int
        First integer
    b: int
        Second integer

    Returns
    -------
    Tuple[int, int, int]
        Greatest common divisor ``g >= 0`` and Bezout coefficients ``u`` and
        ``v`` such that ``u * a + v * b == g``

    Raises
    ------
    automorphic.errors.DomainError
        When both `a` and `b` are zero

    """
    if a == 0 and b == 0:
        raise DomainError('Greatest common divisor of 0 and 0 is undefined.')
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def mod_pow(base: int, exponent: int, modulus: int) -> Residue:
    """Raises `base` to the power of `exponent` modulo `modulus` by binary
    exponentiation, without materializing the full power.

    Parameters
    ----------
    base: int
        Base (may be negative)
    exponent: int
        Non-negative exponent
    modulus: int
        Modulus (at least 2)

    Returns
    -------
    automorphic.modular.Residue
        ``base ** exponent`` reduced modulo `modulus`

    Raises
    ------
    automorphic.errors.DomainError
        When `modulus` is smaller than 2 or `exponent` is negative

    """
    if modulus < 2:
        raise DomainError(
            'Modulus must be at least 2, got {}.'.format(modulus)
        )
    if exponent < 0:
        raise DomainError(
            'Exponent must be non-negative, got {}.'.format(exponent)
        )
    return Residue(pow(base, exponent, modulus), modulus)


def mod_inverse(a: int, modulus: int) -> Residue:
    """Computes the multiplicative inverse of `a` modulo `modulus`.

    Parameters
    ----------
    a: int
        Value that should be inverted
    modulus: int
        Modulus (at least 2)

    Returns
    -------
    automorphic.modular.Residue
        Unique ``w`` in ``[0, modulus)`` with ``a * w % modulus == 1``

    Raises
    ------
    automorphic.errors.NotInvertibleError
        When `a` and `modulus` are not coprime

    """
    if modulus < 2:
        raise DomainError(
            'Modulus must be at least 2, got {}.'.format(modulus)
        )
    g, u, _ = ext_gcd(a % modulus, modulus)
    if g != 1:
        raise NotInvertibleError(a, modulus, g)
    return Residue(u, modulus)


def crt_combine(
        system: Union[CongruenceSystem, Iterable[Tuple[int, int]]]
    ) -> Residue:
    """Solves a system of congruences with pairwise coprime moduli using the
    Chinese remainder theorem.

    Entries are folded pairwise from left to right using Bezout
    coefficients and the running solution is reduced after every fold, so
    intermediate values stay below the product of the moduli processed so
    far.

    Parameters
    ----------
    system: Union[automorphic.modular.CongruenceSystem, Iterable[Tuple[int, int]]]
        Congruences as pairs of residue and modulus

    Returns
    -------
    automorphic.modular.Residue
        Unique solution modulo the product of all moduli

    Raises
    ------
    automorphic.errors.NonCoprimeModuliError
        When two moduli are not coprime
    automorphic.errors.DomainError
        When the system has no entries

    """  # noqa
    if not isinstance(system, CongruenceSystem):
        system = CongruenceSystem(system)
    if len(system) == 0:
        raise DomainError('Congruence system must have at least one entry.')
    x, product = 0, 1
    for residue, modulus in system:
        _, u, _ = ext_gcd(product, modulus)
        # u is the inverse of the running product modulo the new modulus
        x = x + product * ((residue - x) * u % modulus)
        product *= modulus
        x %= product
        logger.debug(
            'folded congruence x = {} (mod {})'.format(residue, modulus)
        )
    return Residue(x, product)

"""Exceptions raised by the :mod:`automorphic` package.

All conditions caused by invalid input derive from :class:`ValueError`, so
callers may catch either the specific or the builtin type.
:class:`InvariantViolationError` is reserved for failed internal
consistency checks and indicates a bug rather than bad input.

"""
from typing import Optional, Tuple


class DomainError(ValueError):

    """Argument lies outside the domain of an operation."""


class NotInvertibleError(DomainError):

    """Value has no multiplicative inverse modulo the given modulus."""

    def __init__(self, value: int, modulus: int, gcd: int) -> None:
        """
        Parameters
        ----------
        value: int
            Value that should have been inverted
        modulus: int
            Modulus
        gcd: int
            Greatest common divisor of `value` and `modulus` (greater than 1)

        """
        super().__init__(
            '{} is not invertible modulo {}: gcd is {}.'.format(
                value, modulus, gcd
            )
        )
        self.value = value
        self.modulus = modulus
        self.gcd = gcd

    def __reduce__(self) -> Tuple[type, Tuple[int, int, int]]:
        return (self.__class__, (self.value, self.modulus, self.gcd))


class NonCoprimeModuliError(DomainError):

    """Two moduli of a congruence system share a common factor."""

    def __init__(self, first: int, second: int, gcd: int) -> None:
        """
        Parameters
        ----------
        first: int
            First modulus of the offending pair
        second: int
            Second modulus of the offending pair
        gcd: int
            Greatest common divisor of the two moduli

        """
        super().__init__(
            'Moduli {} and {} are not coprime: gcd is {}.'.format(
                first, second, gcd
            )
        )
        self.pair = (first, second)
        self.gcd = gcd

    def __reduce__(self) -> Tuple[type, Tuple[int, int, int]]:
        return (self.__class__, self.pair + (self.gcd, ))


class UnsupportedBaseError(DomainError):

    """Base exceeds the ceiling up to which it is factored."""

    def __init__(self, base: int, ceiling: int) -> None:
        super().__init__(
            'Base {} exceeds the supported maximum of {}.'.format(
                base, ceiling
            )
        )
        self.base = base
        self.ceiling = ceiling

    def __reduce__(self) -> Tuple[type, Tuple[int, int]]:
        return (self.__class__, (self.base, self.ceiling))


class OracleTooLargeError(DomainError):

    """Modulus is too large for an exhaustive residue scan."""

    def __init__(self, modulus: int, ceiling: int) -> None:
        super().__init__(
            'Modulus {} exceeds the oracle ceiling of {}.'.format(
                modulus, ceiling
            )
        )
        self.modulus = modulus
        self.ceiling = ceiling

    def __reduce__(self) -> Tuple[type, Tuple[int, int]]:
        return (self.__class__, (self.modulus, self.ceiling))


class DigitOverflowError(DomainError):

    """Value does not fit into the requested number of digits."""

    def __init__(self, value: int, base: int, width: int) -> None:
        super().__init__(
            'Value {} does not fit into {} digits in base {}.'.format(
                value, width, base
            )
        )
        self.value = value
        self.base = base
        self.width = width

    def __reduce__(self) -> Tuple[type, Tuple[int, int, int]]:
        return (self.__class__, (self.value, self.base, self.width))


class InvariantViolationError(ArithmeticError):

    """A structural property that must always hold was found violated."""

    def __init__(self, message: str, base: Optional[int] = None,
                 width: Optional[int] = None) -> None:
        self.detail = message
        if base is not None and width is not None:
            message = '[B={} n={}] {}'.format(base, width, message)
        super().__init__(message)
        self.base = base
        self.width = width

    def __reduce__(
            self
        ) -> Tuple[type, Tuple[str, Optional[int], Optional[int]]]:
        return (self.__class__, (self.detail, self.base, self.width))

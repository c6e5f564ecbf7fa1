"""Positional digit representation of non-negative integers."""
from typing import Any, Iterator, Sequence, Tuple

from automorphic.errors import DigitOverflowError, DomainError


_ALPHABET = '0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ'


class DigitString(object):

    """Fixed-width, zero-padded digit vector of a non-negative integer in a
    given base, most significant digit first."""

    def __init__(self, base: int, digits: Sequence[int]) -> None:
        """
        Parameters
        ----------
        base: int
            Number base (at least 2)
        digits: Sequence[int]
            Digits in the range [0, base), most significant first

        Raises
        ------
        automorphic.errors.DomainError
            When there are no digits or a digit lies outside [0, base)

        """
        if base < 2:
            raise DomainError('Base must be at least 2, got {}.'.format(base))
        digits = tuple(int(d) for d in digits)
        if len(digits) == 0:
            raise DomainError('Digit string must have at least one digit.')
        for d in digits:
            if not 0 <= d < base:
                raise DomainError(
                    'Digit {} is out of range for base {}.'.format(d, base)
                )
        self._base = base
        self._digits = digits

    def __iter__(self) -> Iterator[int]:
        return iter(self._digits)

    def __len__(self) -> int:
        return len(self._digits)

    def __getitem__(self, index: Any) -> Any:
        return self._digits[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DigitString):
            return NotImplemented
        return self._base == other._base and self._digits == other._digits

    def __hash__(self) -> int:
        return hash((self._base, self._digits))

    def __repr__(self) -> str:
        return '{}(base={}, digits={})'.format(
            self.__class__.__name__, self._base, list(self._digits)
        )

    def __str__(self) -> str:
        return self.render()

    @property
    def base(self) -> int:
        """int: number base"""
        return self._base

    @property
    def digits(self) -> Tuple[int, ...]:
        """Tuple[int, ...]: digits, most significant first"""
        return self._digits

    @property
    def width(self) -> int:
        """int: number of digits including leading zeros"""
        return len(self._digits)

    @property
    def leading(self) -> int:
        """int: most significant digit, i.e., the `width`-th digit from the
        right"""
        return self._digits[0]

    @property
    def value(self) -> int:
        """int: integer the digits represent"""
        return from_digits(self._digits, self._base)

    def render(self) -> str:
        """Renders the digits as text.

        Returns
        -------
        str
            Digits ``0-9`` followed by ``A-Z`` for bases up to 36, otherwise
            a bracketed list of dot-separated decimal digits
            (e.g., ``"[12.0.31]"``)

        """
        if self._base <= len(_ALPHABET):
            return ''.join(_ALPHABET[d] for d in self._digits)
        return '[{}]'.format('.'.join(str(d) for d in self._digits))


def to_digits(x: int, base: int, width: int) -> DigitString:
    """Expands a non-negative integer into a zero-padded digit string.

    Parameters
    ----------
    x: int
        Non-negative integer smaller than ``base ** width``
    base: int
        Number base (at least 2)
    width: int
        Number of digits (positive)

    Returns
    -------
    automorphic.digits.DigitString
        Digits of `x`, most significant first

    Raises
    ------
    automorphic.errors.DigitOverflowError
        When `x` does not fit into `width` digits
    automorphic.errors.DomainError
        When `x` is negative or `width` is not positive

    """
    if width < 1:
        raise DomainError('Width must be positive, got {}.'.format(width))
    if base < 2:
        raise DomainError('Base must be at least 2, got {}.'.format(base))
    if x < 0:
        raise DomainError('Value must be non-negative, got {}.'.format(x))
    if x >= base ** width:
        raise DigitOverflowError(x, base, width)
    digits = []
    remainder = int(x)
    for _ in range(width):
        remainder, digit = divmod(remainder, base)
        digits.append(digit)
    digits.reverse()
    return DigitString(base, digits)


def from_digits(digits: Sequence[int], base: int) -> int:
    """Computes the integer a sequence of digits represents.

    Parameters
    ----------
    digits: Sequence[int]
        Digits, most significant first
    base: int
        Number base

    Returns
    -------
    int
        Positional value of `digits`

    """
    value = 0
    for d in digits:
        value = value * base + d
    return value

import unittest

import numpy as np

import pytest

from automorphic.digits import DigitString, from_digits, to_digits
from automorphic.errors import DigitOverflowError, DomainError


expansions = [
    pytest.param(625, 10, 4, [0, 6, 2, 5], '0625'),
    pytest.param(9376, 10, 5, [0, 9, 3, 7, 6], '09376'),
    pytest.param(0, 2, 3, [0, 0, 0], '000'),
    pytest.param(255, 16, 2, [15, 15], 'FF'),
    pytest.param(35, 36, 1, [35], 'Z'),
    pytest.param(12 * 37 ** 2 + 31, 37, 3, [12, 0, 31], '[12.0.31]'),
]


@pytest.mark.parametrize('x,base,width,digits,text', expansions)
def test_to_digits(x, base, width, digits, text):
    digit_string = to_digits(x, base, width)
    assert list(digit_string) == digits
    assert digit_string.render() == text
    assert str(digit_string) == text
    assert digit_string.width == width
    assert digit_string.value == x
    assert from_digits(digits, base) == x


def test_to_digits_random():
    rng = np.random.default_rng(4096)
    for _ in range(200):
        base = int(rng.integers(2, 300))
        width = int(rng.integers(1, 20))
        x = int(rng.integers(0, 2 ** 62)) % base ** width
        digit_string = to_digits(x, base, width)
        assert digit_string.width == width
        assert all(0 <= d < base for d in digit_string)
        assert from_digits(list(digit_string), base) == x


def test_to_digits_overflow():
    with pytest.raises(DigitOverflowError) as info:
        to_digits(10000, 10, 4)
    assert info.value.width == 4


def test_to_digits_invalid():
    with pytest.raises(DomainError):
        to_digits(-1, 10, 4)
    with pytest.raises(DomainError):
        to_digits(5, 10, 0)
    with pytest.raises(DomainError):
        to_digits(5, 1, 4)


class TestDigitString(unittest.TestCase):

    def setUp(self):
        super().setUp()
        self._digits = DigitString(10, [0, 6, 2, 5])

    def test_properties(self):
        assert self._digits.base == 10
        assert self._digits.digits == (0, 6, 2, 5)
        assert self._digits.leading == 0
        assert self._digits.width == 4
        assert len(self._digits) == 4
        assert self._digits[-1] == 5

    def test_equality(self):
        assert self._digits == to_digits(625, 10, 4)
        assert self._digits != to_digits(625, 10, 3)
        assert hash(self._digits) == hash(to_digits(625, 10, 4))

    def test_digit_out_of_range(self):
        with pytest.raises(DomainError):
            DigitString(10, [1, 10])

    def test_empty(self):
        with pytest.raises(DomainError):
            DigitString(10, [])

"""Enumerated values."""
from enum import Enum


class ClassificationValues(Enum):

    """Enumerated values for the number of exact-width members of a twin
    pair, i.e., how many of the two solutions have a non-zero leading digit.
    """

    ONE = 'one'
    TWO = 'two'


class OutcomeValues(Enum):

    """Enumerated values for the outcome of a verification run."""

    PASS = 'pass'
    FAIL = 'fail'


class OutputFormatValues(Enum):

    """Enumerated values for command line output formats."""

    TEXT = 'text'
    JSON = 'json'
    CSV = 'csv'

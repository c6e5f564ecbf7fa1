"""Exact-width classification, counting bounds and leading digit statistics
of idempotent residues."""
import csv
import logging
from collections import Counter
from typing import Dict, Iterable, List, Optional, TextIO, Union

import numpy as np

from automorphic.engine import (
    IdempotentSolution,
    TwinPair,
    enumerate_idempotents,
    enumerate_twin_pairs,
)
from automorphic.enum import ClassificationValues
from automorphic.errors import DomainError, InvariantViolationError
from automorphic.factorization import factor_base

logger = logging.getLogger(__name__)


STATS_CSV_HEADER = (
    'base',
    'n',
    'r_residue',
    's_residue',
    'r_leading',
    's_leading',
    'classification',
)


def is_exact_width(solution: IdempotentSolution) -> bool:
    """Determines whether a solution has exactly ``width_n`` digits, i.e.,
    whether its leading digit is non-zero.

    Parameters
    ----------
    solution: automorphic.engine.IdempotentSolution
        Solution

    Returns
    -------
    bool
        Whether ``base ** (width_n - 1) <= residue``

    """
    return int(solution.residue) >= solution.base ** (solution.width_n - 1)


class WidthCensus(object):

    """Number of solutions with exactly ``width_n`` digits for a base,
    together with the bounds that number must satisfy."""

    def __init__(
            self,
            base: int,
            width_n: int,
            m: int,
            exact_width_count: int,
            twin_count: int = 0,
            one_count: int = 0,
            two_count: int = 0
        ) -> None:
        """
        Parameters
        ----------
        base: int
            Number base
        width_n: int
            Number of digits
        m: int
            Number of distinct primes of `base`
        exact_width_count: int
            Number of positive solutions with exactly `width_n` digits
            (non-trivial solutions only if `width_n` is at least 2)
        twin_count: int, optional
            Number of non-trivial twin pairs
        one_count: int, optional
            Number of twin pairs with exactly one exact-width member
        two_count: int, optional
            Number of twin pairs with two exact-width members

        """
        self.base = base
        self.width_n = width_n
        self.m = m
        self.exact_width_count = exact_width_count
        self.twin_count = twin_count
        self.one_count = one_count
        self.two_count = two_count

    def __repr__(self) -> str:
        return (
            '{}(base={}, width_n={}, m={}, exact_width_count={}, '
            'bounds=[{}, {}])'.format(
                self.__class__.__name__,
                self.base,
                self.width_n,
                self.m,
                self.exact_width_count,
                self.lower_bound,
                self.upper_bound
            )
        )

    @property
    def lower_bound(self) -> int:
        """int: ``2 ** (m - 1) - 1``, binding for widths of at least 2"""
        return 2 ** (self.m - 1) - 1

    @property
    def upper_bound(self) -> int:
        """int: ``2 ** m - 2``, binding for widths of at least 2"""
        return 2 ** self.m - 2

    @property
    def n1_exact(self) -> Optional[int]:
        """Union[int, None]: ``2 ** m - 1`` for width 1, ``None`` otherwise"""
        if self.width_n == 1:
            return 2 ** self.m - 1
        return None

    def within_bounds(self) -> bool:
        """Determines whether the count satisfies its bounds.

        Returns
        -------
        bool
            Whether the count equals `n1_exact` for width 1 or lies within
            [`lower_bound`, `upper_bound`] otherwise

        """
        if self.width_n == 1:
            return self.exact_width_count == self.n1_exact
        return self.lower_bound <= self.exact_width_count <= self.upper_bound


class TwinLeadingRecord(object):

    """Leading digits of the two members of a twin pair."""

    def __init__(
            self,
            base: int,
            width_n: int,
            r_residue: int,
            s_residue: int,
            r_leading_digit: int,
            s_leading_digit: int,
            one_or_two: Union[str, ClassificationValues]
        ) -> None:
        """
        Parameters
        ----------
        base: int
            Number base
        width_n: int
            Number of digits
        r_residue: int
            Residue of the first member
        s_residue: int
            Residue of the second member
        r_leading_digit: int
            Leading digit of the first member at width `width_n`
        s_leading_digit: int
            Leading digit of the second member at width `width_n`
        one_or_two: Union[str, automorphic.enum.ClassificationValues]
            Whether one or two members have a non-zero leading digit

        Raises
        ------
        automorphic.errors.DomainError
            When the leading digits do not add up to ``base - 1`` or the
            classification does not match them

        """
        self.base = base
        self.width_n = width_n
        self.r_residue = int(r_residue)
        self.s_residue = int(s_residue)
        self.r_leading_digit = r_leading_digit
        self.s_leading_digit = s_leading_digit
        self.one_or_two = ClassificationValues(one_or_two)
        if r_leading_digit + s_leading_digit != base - 1:
            raise DomainError(
                'Leading digits {} and {} do not add up to {}.'.format(
                    r_leading_digit, s_leading_digit, base - 1
                )
            )
        has_zero = r_leading_digit == 0 or s_leading_digit == 0
        if has_zero != (self.one_or_two == ClassificationValues.ONE):
            raise DomainError(
                'Classification "{}" does not match leading digits {} '
                'and {}.'.format(
                    self.one_or_two.value, r_leading_digit, s_leading_digit
                )
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwinLeadingRecord):
            return NotImplemented
        return self.as_row() == other.as_row()

    def __repr__(self) -> str:
        return '{}({})'.format(
            self.__class__.__name__, ', '.join(self.as_row())
        )

    def as_row(self) -> List[str]:
        """Formats the record as a row of the statistics CSV file.

        Returns
        -------
        List[str]
            Values in the order of `STATS_CSV_HEADER`

        """
        return [
            str(self.base),
            str(self.width_n),
            str(self.r_residue),
            str(self.s_residue),
            str(self.r_leading_digit),
            str(self.s_leading_digit),
            self.one_or_two.value,
        ]


def count_exact_width(base: int, n: int) -> WidthCensus:
    """Counts the positive solutions with exactly `n` digits.

    For ``n >= 2`` the trivial solutions 0 and 1 have fewer than `n` digits
    and only non-trivial solutions are counted. For ``n == 1`` all positive
    solutions are counted, including 1.

    Parameters
    ----------
    base: int
        Number base (at least 2)
    n: int
        Number of digits (positive)

    Returns
    -------
    automorphic.census.WidthCensus
        Count and bounds

    Raises
    ------
    automorphic.errors.InvariantViolationError
        When the count violates its bounds

    """
    factorization = factor_base(base)
    if n == 1:
        solutions = enumerate_idempotents(base, 1, include_trivial=True)
        count = sum(1 for s in solutions if int(s.residue) > 0)
        census = WidthCensus(base, n, factorization.m, count)
    else:
        solutions = enumerate_idempotents(base, n, include_trivial=False)
        count = sum(1 for s in solutions if is_exact_width(s))
        classifications = Counter(
            twin_digit_audit(pair).one_or_two
            for pair in enumerate_twin_pairs(base, n)
        )
        census = WidthCensus(
            base,
            n,
            factorization.m,
            count,
            twin_count=sum(classifications.values()),
            one_count=classifications[ClassificationValues.ONE],
            two_count=classifications[ClassificationValues.TWO]
        )
        if count != census.one_count + 2 * census.two_count:
            raise InvariantViolationError(
                'exact-width count {} disagrees with twin census '
                'one={} two={}'.format(
                    count, census.one_count, census.two_count
                ),
                base=base,
                width=n
            )
    if not census.within_bounds():
        raise InvariantViolationError(
            'exact-width count {} violates bounds [{}, {}]'.format(
                census.exact_width_count,
                census.lower_bound,
                census.upper_bound
            ),
            base=base,
            width=n
        )
    logger.debug('census for B={} n={}: {}'.format(base, n, census))
    return census


def twin_digit_audit(pair: TwinPair) -> TwinLeadingRecord:
    """Reads off the leading digits of a twin pair and classifies how many of
    its members have exactly ``width_n`` digits.

    Parameters
    ----------
    pair: automorphic.engine.TwinPair
        Twin pair with a width of at least 2

    Returns
    -------
    automorphic.census.TwinLeadingRecord
        Leading digits and classification

    Raises
    ------
    automorphic.errors.DomainError
        When the width of `pair` is 1
    automorphic.errors.InvariantViolationError
        When the leading digits do not add up to ``base - 1``

    """
    if pair.width_n < 2:
        raise DomainError(
            'Leading digit audit requires a width of at least 2.'
        )
    r_leading = pair.r.digits.leading
    s_leading = pair.s.digits.leading
    if r_leading + s_leading != pair.base - 1:
        raise InvariantViolationError(
            'leading digits {} and {} do not add up to {}'.format(
                r_leading, s_leading, pair.base - 1
            ),
            base=pair.base,
            width=pair.width_n
        )
    if r_leading == 0 or s_leading == 0:
        classification = ClassificationValues.ONE
    else:
        classification = ClassificationValues.TWO
    return TwinLeadingRecord(
        base=pair.base,
        width_n=pair.width_n,
        r_residue=int(pair.r.residue),
        s_residue=int(pair.s.residue),
        r_leading_digit=r_leading,
        s_leading_digit=s_leading,
        one_or_two=classification
    )


def twin_digit_complement(pair: TwinPair) -> bool:
    """Checks that the digits of a twin pair complement each other place by
    place: the units digits add up to ``base + 1`` and the digits of every
    other place add up to ``base - 1``.

    Parameters
    ----------
    pair: automorphic.engine.TwinPair
        Twin pair

    Returns
    -------
    bool
        ``True`` (failures raise)

    Raises
    ------
    automorphic.errors.InvariantViolationError
        When a pair of digits does not add up as expected

    """
    sums = (
        np.asarray(pair.r.digits.digits, dtype=np.int64) +
        np.asarray(pair.s.digits.digits, dtype=np.int64)
    )
    expected = np.full(sums.shape, pair.base - 1, dtype=np.int64)
    expected[-1] = pair.base + 1
    mismatches = np.flatnonzero(sums != expected)
    if mismatches.size > 0:
        place = pair.width_n - int(mismatches[0])
        raise InvariantViolationError(
            'digits of {} and {} in place {} add up to {} instead of '
            '{}'.format(
                pair.r.digits,
                pair.s.digits,
                place,
                int(sums[mismatches[0]]),
                int(expected[mismatches[0]])
            ),
            base=pair.base,
            width=pair.width_n
        )
    return True


def leading_digit_stats(
        base: int,
        n_from: int,
        n_to: int
    ) -> List[TwinLeadingRecord]:
    """Collects leading digit records of every non-trivial twin pair over a
    range of widths.

    Parameters
    ----------
    base: int
        Number base (at least 2)
    n_from: int
        Smallest width (at least 2)
    n_to: int
        Largest width (inclusive)

    Returns
    -------
    List[automorphic.census.TwinLeadingRecord]
        One record per twin pair and width, ordered by width

    Raises
    ------
    automorphic.errors.DomainError
        When the range is empty or starts below 2

    """
    if n_from < 2:
        raise DomainError(
            'Widths must start at 2 or above, got {}.'.format(n_from)
        )
    if n_from > n_to:
        raise DomainError(
            'Width range {}..{} is empty.'.format(n_from, n_to)
        )
    records = []
    for n in range(n_from, n_to + 1):
        logger.info('collect leading digits for B={} n={}'.format(base, n))
        for pair in enumerate_twin_pairs(base, n):
            records.append(twin_digit_audit(pair))
    return records


def summarize_classifications(
        records: Iterable[TwinLeadingRecord]
    ) -> Dict[str, int]:
    """Counts records per classification.

    Parameters
    ----------
    records: Iterable[automorphic.census.TwinLeadingRecord]
        Leading digit records

    Returns
    -------
    Dict[str, int]
        Number of records classified ``"one"`` and ``"two"``

    """
    counts = Counter(record.one_or_two for record in records)
    return {
        value.value: counts[value]
        for value in ClassificationValues
    }


def write_stats_csv(
        records: Iterable[TwinLeadingRecord],
        fp: TextIO
    ) -> None:
    """Writes leading digit records in CSV format, preceded by a header row.

    Parameters
    ----------
    records: Iterable[automorphic.census.TwinLeadingRecord]
        Leading digit records
    fp: TextIO
        Text stream opened with ``newline=''``

    """
    writer = csv.writer(fp, lineterminator='\n')
    writer.writerow(STATS_CSV_HEADER)
    for record in records:
        writer.writerow(record.as_row())

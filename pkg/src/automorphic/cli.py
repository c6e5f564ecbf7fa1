"""Command line interface of the :mod:`automorphic` package.

Exit codes are 0 on success, 1 if a verification failed and 2 for usage or
input/output errors. Standard output is deterministic; timing and log
messages go to standard error.

"""
import csv
import io
import json
import logging
import sys
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import click

from automorphic.census import (
    TwinLeadingRecord,
    is_exact_width,
    leading_digit_stats,
    summarize_classifications,
    write_stats_csv,
)
from automorphic.cryptarithm import WORD, hint_ladder, solve_atom
from automorphic.digits import to_digits
from automorphic.engine import (
    ORACLE_CEILING,
    SelectorTuple,
    brute_force_idempotents,
    enumerate_idempotents,
    solve_selector,
)
from automorphic.enum import OutcomeValues, OutputFormatValues
from automorphic.errors import DomainError, InvariantViolationError
from automorphic.factorization import factor_base
from automorphic.verification import check_cell
from automorphic.version import __version__

logger = logging.getLogger(__name__)


EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class RunReport(object):

    """Outcome of a checking command."""

    def __init__(
            self,
            command: str,
            parameters: Dict[str, Any],
            violations: Sequence[str] = (),
            elapsed: float = 0.0
        ) -> None:
        """
        Parameters
        ----------
        command: str
            Name of the command
        parameters: Dict[str, Any]
            Parameters the command was invoked with
        violations: Sequence[str], optional
            Human-readable description of every violated property
        elapsed: float, optional
            Wall clock duration in milliseconds

        """
        self.command = command
        self.parameters = dict(parameters)
        self.violations = list(violations)
        self.elapsed = elapsed

    @property
    def outcome(self) -> OutcomeValues:
        """automorphic.enum.OutcomeValues: ``"pass"`` if there are no
        violations, ``"fail"`` otherwise"""
        if self.violations:
            return OutcomeValues.FAIL
        return OutcomeValues.PASS

    @property
    def exit_code(self) -> int:
        """int: process exit code corresponding to the outcome"""
        if self.outcome == OutcomeValues.PASS:
            return EXIT_SUCCESS
        return EXIT_FAILURE

    def as_dict(self) -> Dict[str, Any]:
        """Serializes the report without the elapsed time, which is not
        deterministic.

        Returns
        -------
        Dict[str, Any]
            Command, parameters, outcome and violations

        """
        return {
            'command': self.command,
            'parameters': self.parameters,
            'outcome': self.outcome.value,
            'violations': self.violations,
        }


def parse_range(text: str) -> Tuple[int, int]:
    """Parses an inclusive range of the form ``a..b`` or a single integer.

    Parameters
    ----------
    text: str
        Range expression

    Returns
    -------
    Tuple[int, int]
        First and last value (both inclusive)

    Raises
    ------
    automorphic.errors.DomainError
        When `text` is malformed or describes an empty range

    """
    first, separator, last = text.partition('..')
    try:
        start = int(first)
        stop = int(last) if separator else start
    except ValueError:
        raise DomainError(
            'Invalid range "{}", expected "a..b" or an integer.'.format(text)
        )
    if start > stop:
        raise DomainError(
            'Range "{}" is empty.'.format(text)
        )
    return start, stop


def _format_range(bounds: Tuple[int, int]) -> str:
    return '{}..{}'.format(*bounds)


def _print_columns(header: Sequence[str],
                   rows: Iterable[Sequence[str]]) -> None:
    lines = [list(header)] + [list(row) for row in rows]
    widths = [
        max(len(line[i]) for line in lines)
        for i in range(len(header))
    ]
    for row in lines:
        cells = [value.ljust(w) for value, w in zip(row, widths)]
        click.echo('  '.join(cells).rstrip())


def cmd_list(
        base: int,
        n: int,
        include_trivial: bool = False,
        output_format: Union[str, OutputFormatValues] = 'text'
    ) -> int:
    """Prints the idempotents modulo ``base ** n``.

    Parameters
    ----------
    base: int
        Number base
    n: int
        Number of digits
    include_trivial: bool, optional
        Whether 0 and 1 should be listed
    output_format: Union[str, automorphic.enum.OutputFormatValues], optional
        Output format

    Returns
    -------
    int
        Exit code

    """
    output_format = OutputFormatValues(output_format)
    solutions = enumerate_idempotents(base, n, include_trivial=include_trivial)
    if output_format == OutputFormatValues.JSON:
        items = [
            {
                'base': s.base,
                'n': s.width_n,
                'residue': str(int(s.residue)),
                'digits': list(s.digits),
                'selector': list(s.selector),
                'exact_width': is_exact_width(s),
            }
            for s in solutions
        ]
        click.echo(json.dumps(items, indent=2))
    elif output_format == OutputFormatValues.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(
            ['base', 'n', 'residue', 'digits', 'selector', 'exact_width']
        )
        for s in solutions:
            writer.writerow([
                s.base,
                s.width_n,
                int(s.residue),
                s.digits.render(),
                str(s.selector),
                'yes' if is_exact_width(s) else 'no',
            ])
        click.echo(buffer.getvalue(), nl=False)
    else:
        _print_columns(
            ['residue', 'digits', 'selector', 'exact_width'],
            [
                [
                    str(int(s.residue)),
                    s.digits.render(),
                    str(s.selector),
                    'yes' if is_exact_width(s) else 'no',
                ]
                for s in solutions
            ]
        )
    return EXIT_SUCCESS


def cmd_table(base: int, max_n: int) -> int:
    """Prints the non-trivial solutions of every width up to `max_n`, one
    column per selector class.

    For bases with two distinct primes the columns are labelled ``r_n`` (the
    class ending like the residue with selector ``(1,0)``) and ``s_n``. A
    prime power base has no non-trivial class, which is noted below the
    table.

    Parameters
    ----------
    base: int
        Number base
    max_n: int
        Largest width

    Returns
    -------
    int
        Exit code

    """
    if max_n < 1:
        raise DomainError('Largest width must be positive, got {}.'.format(
            max_n
        ))
    factorization = factor_base(base)
    selectors = sorted(
        (
            t for t in SelectorTuple.iter_all(factorization.m)
            if not t.is_trivial
        ),
        reverse=True
    )
    if factorization.m == 2:
        header = ['n', 'r_n', 's_n']
    else:
        header = ['n'] + [
            't={}'.format(''.join(str(b) for b in t)) for t in selectors
        ]
    rows = []
    for n in range(1, max_n + 1):
        rows.append(
            [str(n)] + [
                solve_selector(factorization, n, t).digits.render()
                for t in selectors
            ]
        )
    widths = [
        max(len(row[i]) for row in [header] + rows)
        for i in range(len(header))
    ]
    click.echo(' | '.join(h.rjust(w) for h, w in zip(header, widths)))
    click.echo('-+-'.join('-' * w for w in widths))
    for row in rows:
        click.echo(' | '.join(v.rjust(w) for v, w in zip(row, widths)))
    if not selectors:
        click.echo(
            'no non-trivial solutions: base {} is a prime power'.format(base)
        )
    return EXIT_SUCCESS


def cmd_verify(
        bases: Tuple[int, int],
        widths: Tuple[int, int],
        oracle_ceiling: int = ORACLE_CEILING,
        jobs: int = 1,
        output_format: Union[str, OutputFormatValues] = 'text'
    ) -> RunReport:
    """Checks every structural property over a grid of bases and widths.

    Parameters
    ----------
    bases: Tuple[int, int]
        Smallest and largest base (inclusive)
    widths: Tuple[int, int]
        Smallest and largest width (inclusive)
    oracle_ceiling: int, optional
        Largest modulus that gets compared against an exhaustive scan
    jobs: int, optional
        Number of worker processes
    output_format: Union[str, automorphic.enum.OutputFormatValues], optional
        Output format (text or JSON)

    Returns
    -------
    automorphic.cli.RunReport
        Violations found in grid order

    Raises
    ------
    automorphic.errors.DomainError
        When a range starts below its minimum or the largest base is not
        supported

    """
    output_format = OutputFormatValues(output_format)
    if bases[0] < 2:
        raise DomainError('Bases must start at 2, got {}.'.format(bases[0]))
    if widths[0] < 1:
        raise DomainError('Widths must start at 1, got {}.'.format(widths[0]))
    factor_base(bases[1])
    start = time.perf_counter()
    cells = [
        (b, n)
        for b in range(bases[0], bases[1] + 1)
        for n in range(widths[0], widths[1] + 1)
    ]
    check = partial(check_cell, oracle_ceiling=oracle_ceiling)
    results = _map_cells(check, cells, jobs)
    violations = [message for result in results for message in result]
    report = RunReport(
        command='verify',
        parameters={
            'bases': _format_range(bases),
            'n': _format_range(widths),
            'oracle_ceiling': oracle_ceiling,
        },
        violations=violations,
        elapsed=(time.perf_counter() - start) * 1000.0
    )
    if output_format == OutputFormatValues.JSON:
        click.echo(json.dumps(report.as_dict(), indent=2))
    else:
        for message in report.violations:
            click.echo(message)
        click.echo('verify: {} (cells={}, violations={})'.format(
            report.outcome.value, len(cells), len(report.violations)
        ))
    return report


def cmd_oracle(
        base: int,
        n: int,
        oracle_ceiling: int = ORACLE_CEILING
    ) -> RunReport:
    """Compares the enumerated idempotents with an exhaustive scan.

    Parameters
    ----------
    base: int
        Number base
    n: int
        Number of digits
    oracle_ceiling: int, optional
        Largest modulus that may be scanned

    Returns
    -------
    automorphic.cli.RunReport
        One violation per residue found by only one of the two methods

    """
    start = time.perf_counter()
    enumerated = [int(s.residue) for s in enumerate_idempotents(base, n)]
    scanned = brute_force_idempotents(base, n, ceiling=oracle_ceiling)
    only_enumerated = sorted(set(enumerated) - set(scanned))
    only_scanned = sorted(set(scanned) - set(enumerated))
    violations = (
        ['{} found only by enumeration'.format(x) for x in only_enumerated] +
        ['{} found only by exhaustive scan'.format(x) for x in only_scanned]
    )
    click.echo('enumerated: {}'.format(' '.join(str(x) for x in enumerated)))
    click.echo('brute-force: {}'.format(' '.join(str(x) for x in scanned)))
    if violations:
        click.echo('difference: {}'.format(
            ' '.join(str(x) for x in sorted(only_enumerated + only_scanned))
        ))
    else:
        click.echo('difference: none')
    return RunReport(
        command='oracle',
        parameters={
            'base': base,
            'n': n,
            'oracle_ceiling': oracle_ceiling,
        },
        violations=violations,
        elapsed=(time.perf_counter() - start) * 1000.0
    )


def _stats_for_width(base: int, n: int) -> List[TwinLeadingRecord]:
    return leading_digit_stats(base, n, n)


def cmd_stats(
        base: int,
        n_from: int,
        n_to: int,
        output_path: Optional[str] = None,
        output_format: Union[str, OutputFormatValues] = 'text',
        jobs: int = 1
    ) -> Dict[str, int]:
    """Collects leading digit records of the twin pairs over a range of
    widths, writes them in CSV format and prints how many twin pairs have
    one or two exact-width members.

    Parameters
    ----------
    base: int
        Number base
    n_from: int
        Smallest width (at least 2)
    n_to: int
        Largest width (inclusive)
    output_path: str, optional
        Path of the CSV file
    output_format: Union[str, automorphic.enum.OutputFormatValues], optional
        ``"csv"`` writes the records to standard output if no `output_path`
        is given; otherwise the summary is printed
    jobs: int, optional
        Number of worker processes

    Returns
    -------
    Dict[str, int]
        Number of records per classification

    """
    output_format = OutputFormatValues(output_format)
    if n_from < 2:
        raise DomainError(
            'Widths must start at 2 or above, got {}.'.format(n_from)
        )
    if n_from > n_to:
        raise DomainError(
            'Width range {}..{} is empty.'.format(n_from, n_to)
        )
    cells = [(base, n) for n in range(n_from, n_to + 1)]
    records = [
        record
        for result in _map_cells(_stats_for_width, cells, jobs)
        for record in result
    ]
    if output_path is not None:
        with open(output_path, 'w', newline='') as fp:
            write_stats_csv(records, fp)
        logger.info('wrote {} records to "{}"'.format(
            len(records), output_path
        ))
    summary = summarize_classifications(records)
    if output_format == OutputFormatValues.CSV and output_path is None:
        buffer = io.StringIO()
        write_stats_csv(records, buffer)
        click.echo(buffer.getvalue(), nl=False)
        return summary
    click.echo('records={}'.format(len(records)))
    for key, count in summary.items():
        click.echo('{}={}'.format(key, count))
    per_class: Dict[int, Counter] = defaultdict(Counter)
    for record in records:
        per_class[record.r_residue % record.base][record.one_or_two.value] += 1
    if len(per_class) > 1:
        for ending in sorted(per_class):
            counts = per_class[ending]
            click.echo('pair r ending in {}: {}'.format(
                to_digits(ending, base, 1).render(),
                ' '.join(
                    '{}={}'.format(key, counts[key]) for key in summary
                )
            ))
    return summary


def cmd_cryptarithm() -> int:
    """Solves ATOM x ATOM = ****ATOM and shows how the solution grows one
    digit at a time.

    Returns
    -------
    int
        Exit code

    """
    click.echo('{0} x {0} = ****{0}'.format(WORD))
    for k, solutions in enumerate(hint_ladder(), start=1):
        suffix = WORD[-k:]
        values = ' '.join(s.digits.render() for s in solutions)
        if k == 1:
            click.echo('{}: {} (0 and 1 eliminated)'.format(suffix, values))
        else:
            click.echo('{}: {}'.format(suffix, values))
    candidates = solve_atom()
    for candidate in candidates:
        if candidate.accepted:
            click.echo('candidate {}: accepted'.format(candidate.digits))
        else:
            click.echo('candidate {}: rejected, {}'.format(
                candidate.digits, candidate.rejection
            ))
    accepted = [c for c in candidates if c.accepted]
    for candidate in accepted:
        click.echo('{} = {}'.format(WORD, candidate.digits))
        click.echo('{}^2 = {}'.format(candidate.digits, candidate.square))
    click.echo('solutions: {}'.format(len(accepted)))
    return EXIT_SUCCESS


def _map_cells(
        function: Callable[[int, int], Any],
        cells: Sequence[Tuple[int, int]],
        jobs: int
    ) -> List[Any]:
    """Applies `function` to every (base, width) cell, in worker processes
    if `jobs` exceeds 1. Results are returned in the order of `cells`."""
    bases = [b for b, _ in cells]
    widths = [n for _, n in cells]
    if jobs <= 1 or len(cells) <= 1:
        return list(map(function, bases, widths))
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, bases, widths))


class RangeParamType(click.ParamType):

    """Inclusive integer range ``a..b`` or a single integer ``a``."""

    name = 'range'

    def convert(
            self,
            value: Any,
            param: Optional[click.Parameter],
            ctx: Optional[click.Context]
        ) -> Tuple[int, int]:
        if isinstance(value, tuple):
            return value
        try:
            return parse_range(value)
        except DomainError as error:
            self.fail(str(error), param, ctx)


RANGE = RangeParamType()


@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.option(
    '-v', '--verbose', count=True,
    help='Increase logging verbosity (may be repeated).'
)
@click.version_option(__version__, prog_name='automorphic')
def cli(verbose: int) -> None:
    """Compute, classify and verify idempotent residues x with x^2 = x
    modulo B^n. Ranges "a..b" are inclusive on both ends."""
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s'
    )


@cli.command('list')
@click.option('--base', type=int, required=True, help='Number base.')
@click.option('--n', 'n', type=int, required=True, help='Number of digits.')
@click.option(
    '--include-trivial', is_flag=True,
    help='Also list the trivial solutions 0 and 1.'
)
@click.option(
    '--format', 'output_format',
    type=click.Choice([v.value for v in OutputFormatValues]),
    default=OutputFormatValues.TEXT.value,
    show_default=True
)
def list_command(
        base: int,
        n: int,
        include_trivial: bool,
        output_format: str
    ) -> int:
    """List the idempotents modulo B^n."""
    return cmd_list(base, n, include_trivial, output_format)


@cli.command('table')
@click.option('--base', type=int, required=True, help='Number base.')
@click.option('--max-n', type=int, required=True, help='Largest width.')
def table_command(base: int, max_n: int) -> int:
    """Tabulate the non-trivial solutions for n = 1..max-n."""
    return cmd_table(base, max_n)


@cli.command('verify')
@click.option('--bases', type=RANGE, required=True, help='Bases a..b.')
@click.option('--n', 'widths', type=RANGE, required=True, help='Widths a..b.')
@click.option(
    '--oracle-ceiling', type=int, default=ORACLE_CEILING, show_default=True,
    help='Largest modulus compared against an exhaustive scan.'
)
@click.option(
    '--jobs', type=click.IntRange(min=1), default=1, show_default=True,
    help='Number of worker processes.'
)
@click.option(
    '--format', 'output_format',
    type=click.Choice([
        OutputFormatValues.TEXT.value, OutputFormatValues.JSON.value
    ]),
    default=OutputFormatValues.TEXT.value,
    show_default=True
)
def verify_command(
        bases: Tuple[int, int],
        widths: Tuple[int, int],
        oracle_ceiling: int,
        jobs: int,
        output_format: str
    ) -> int:
    """Check all structural properties over a grid of bases and widths."""
    report = cmd_verify(bases, widths, oracle_ceiling, jobs, output_format)
    return report.exit_code


@cli.command('oracle')
@click.option('--base', type=int, required=True, help='Number base.')
@click.option('--n', 'n', type=int, required=True, help='Number of digits.')
@click.option(
    '--oracle-ceiling', type=int, default=ORACLE_CEILING, show_default=True,
    help='Largest modulus that may be scanned.'
)
def oracle_command(base: int, n: int, oracle_ceiling: int) -> int:
    """Compare enumeration with an exhaustive scan of all residues."""
    return cmd_oracle(base, n, oracle_ceiling).exit_code


@cli.command('stats')
@click.option('--base', type=int, required=True, help='Number base.')
@click.option('--n', 'widths', type=RANGE, required=True, help='Widths a..b.')
@click.option(
    '--out', 'output_path', type=click.Path(dir_okay=False), default=None,
    help='Path of the CSV file.'
)
@click.option(
    '--format', 'output_format',
    type=click.Choice([
        OutputFormatValues.TEXT.value, OutputFormatValues.CSV.value
    ]),
    default=OutputFormatValues.TEXT.value,
    show_default=True
)
@click.option(
    '--jobs', type=click.IntRange(min=1), default=1, show_default=True,
    help='Number of worker processes.'
)
def stats_command(
        base: int,
        widths: Tuple[int, int],
        output_path: Optional[str],
        output_format: str,
        jobs: int
    ) -> int:
    """Leading digits of twin pairs over a range of widths."""
    cmd_stats(base, widths[0], widths[1], output_path, output_format, jobs)
    return EXIT_SUCCESS


@cli.command('cryptarithm')
def cryptarithm_command() -> int:
    """Solve ATOM x ATOM = ****ATOM."""
    return cmd_cryptarithm()


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Runs the command line interface.

    Parameters
    ----------
    argv: Sequence[str], optional
        Arguments (defaults to ``sys.argv[1:]``)

    Returns
    -------
    int
        Exit code

    """
    start = time.perf_counter()
    try:
        code = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name='automorphic',
            standalone_mode=False
        )
    except click.ClickException as error:
        error.show()
        return error.exit_code
    except click.Abort:
        return EXIT_FAILURE
    except InvariantViolationError as error:
        click.echo('error: {}'.format(error), err=True)
        return EXIT_FAILURE
    except (DomainError, TypeError, OSError) as error:
        click.echo('error: {}'.format(error), err=True)
        return EXIT_USAGE
    click.echo(
        'elapsed: {:.1f} ms'.format((time.perf_counter() - start) * 1000.0),
        err=True
    )
    return int(code or EXIT_SUCCESS)


def _main() -> None:
    sys.exit(main())


if __name__ == '__main__':
    _main()

import pytest

from automorphic import verification
from automorphic.errors import DomainError, InvariantViolationError
from automorphic.verification import CHECKS, check_cell


cells = [
    pytest.param(2, 1),
    pytest.param(6, 5),
    pytest.param(10, 1),
    pytest.param(10, 7),
    pytest.param(12, 4),
    pytest.param(30, 3),
    pytest.param(97, 2),
    pytest.param(210, 6),
]


@pytest.mark.parametrize('base,n', cells)
def test_check_cell(base, n):
    assert check_cell(base, n) == []


def test_check_cell_base10_sweep():
    for n in range(2, 11):
        assert check_cell(10, n, oracle_ceiling=10 ** 6) == []


def test_check_names():
    names = [name for name, _ in CHECKS]
    assert len(set(names)) == len(names)
    assert 'oracle' in names
    assert 'base10-closed-form' in names


def test_check_cell_reports_violation(monkeypatch):
    def broken_check(base, n, oracle_ceiling):
        raise InvariantViolationError('residues disagree')

    monkeypatch.setattr(
        verification, 'CHECKS', [('broken', broken_check)]
    )
    violations = check_cell(10, 3)
    assert violations == ['[B=10 n=3] broken: residues disagree']


def test_check_cell_propagates_domain_errors():
    with pytest.raises(DomainError):
        check_cell(2 ** 32 + 1, 1)
    with pytest.raises(DomainError):
        check_cell(10, 0)

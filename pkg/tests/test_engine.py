import unittest

import pytest

from automorphic.engine import (
    IdempotentSolution,
    SelectorTuple,
    TwinPair,
    base10_nontrivial,
    brute_force_idempotents,
    closed_form_base10,
    enumerate_idempotents,
    enumerate_twin_pairs,
    extend_solution,
    inverse_of_five_mod_pow2,
    is_idempotent,
    solve_selector,
    twin_of,
)
from automorphic.errors import (
    DomainError,
    InvariantViolationError,
    OracleTooLargeError,
)
from automorphic.factorization import factor_base
from automorphic.modular import mod_inverse


# Non-trivial base-10 solutions ending in 5 and 6 for n = 1..10
base10_solutions = [
    pytest.param(1, '5', '6'),
    pytest.param(2, '25', '76'),
    pytest.param(3, '625', '376'),
    pytest.param(4, '0625', '9376'),
    pytest.param(5, '90625', '09376'),
    pytest.param(6, '890625', '109376'),
    pytest.param(7, '2890625', '7109376'),
    pytest.param(8, '12890625', '87109376'),
    pytest.param(9, '212890625', '787109376'),
    pytest.param(10, '8212890625', '1787109376'),
]


oracle_cells = [
    pytest.param(base, n)
    for base in range(2, 37)
    for n in range(1, 6)
    if base ** n <= 10 ** 7
]


class TestSelectorTuple(unittest.TestCase):

    def test_construction(self):
        t = SelectorTuple([1, 0])
        assert t == (1, 0)
        assert t.bits == (1, 0)
        assert str(t) == '(1,0)'
        assert not t.is_trivial
        assert t.complement() == (0, 1)

    def test_trivial(self):
        assert SelectorTuple([0, 0, 0]).is_trivial
        assert SelectorTuple([1]).is_trivial

    def test_iter_all(self):
        selectors = list(SelectorTuple.iter_all(2))
        assert selectors == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert len(list(SelectorTuple.iter_all(4))) == 16

    def test_invalid_bits(self):
        with pytest.raises(DomainError):
            SelectorTuple([0, 2])
        with pytest.raises(DomainError):
            SelectorTuple([])


class TestIdempotentSolution(unittest.TestCase):

    def setUp(self):
        super().setUp()
        self._solution = IdempotentSolution(10, 4, 9376, (0, 1))

    def test_properties(self):
        assert self._solution.base == 10
        assert self._solution.width_n == 4
        assert self._solution.modulus == 10000
        assert self._solution.residue == 9376
        assert self._solution.residue.modulus == 10000
        assert self._solution.selector == (0, 1)
        assert self._solution.digits.render() == '9376'
        assert not self._solution.is_trivial

    def test_equality(self):
        other = solve_selector(factor_base(10), 4, (0, 1))
        assert self._solution == other
        assert hash(self._solution) == hash(other)

    def test_not_idempotent(self):
        with pytest.raises(DomainError):
            IdempotentSolution(10, 4, 9375, (0, 1))

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            IdempotentSolution(10, 4, 19376, (0, 1))

    def test_selector_mismatch(self):
        with pytest.raises(DomainError):
            IdempotentSolution(10, 4, 9376, (1, 0))
        with pytest.raises(DomainError):
            IdempotentSolution(10, 4, 9376, (0, 1, 1))


class TestTwinPair(unittest.TestCase):

    def setUp(self):
        super().setUp()
        self._r = IdempotentSolution(10, 4, 625, (1, 0))
        self._s = IdempotentSolution(10, 4, 9376, (0, 1))

    def test_construction(self):
        pair = TwinPair(self._r, self._s)
        assert pair.base == 10
        assert pair.width_n == 4
        assert list(pair) == [self._r, self._s]

    def test_trivial_member(self):
        with pytest.raises(DomainError):
            TwinPair(IdempotentSolution(10, 4, 0, (0, 0)), self._s)

    def test_same_selector(self):
        with pytest.raises(DomainError):
            TwinPair(self._s, self._s)

    def test_width_mismatch(self):
        with pytest.raises(DomainError):
            TwinPair(IdempotentSolution(10, 3, 625, (1, 0)), self._s)


def test_is_idempotent():
    assert is_idempotent(9376, 10000)
    assert is_idempotent(0, 10000)
    assert not is_idempotent(9375, 10000)


@pytest.mark.parametrize('n,r_text,s_text', base10_solutions)
def test_solve_selector_base10(n, r_text, s_text):
    factorization = factor_base(10)
    r = solve_selector(factorization, n, (1, 0))
    s = solve_selector(factorization, n, (0, 1))
    assert r.digits.render() == r_text
    assert s.digits.render() == s_text
    assert r.residue ** 2 % 10 ** n == r.residue


def test_solve_selector_wrong_length():
    with pytest.raises(DomainError):
        solve_selector(factor_base(10), 4, (1, 0, 1))


def test_enumerate_idempotents():
    solutions = enumerate_idempotents(10, 4)
    assert [int(s.residue) for s in solutions] == [0, 1, 625, 9376]
    nontrivial = enumerate_idempotents(10, 4, include_trivial=False)
    assert [int(s.residue) for s in nontrivial] == [625, 9376]


def test_enumerate_idempotents_counts():
    for base in range(2, 101):
        m = factor_base(base).m
        solutions = enumerate_idempotents(base, 3)
        residues = [int(s.residue) for s in solutions]
        assert len(residues) == 2 ** m
        assert len(set(residues)) == 2 ** m


def test_enumerate_idempotents_prime_power():
    for base in (2, 7, 8, 9, 16, 27, 32):
        residues = [int(s.residue) for s in enumerate_idempotents(base, 5)]
        assert residues == [0, 1]
        assert enumerate_idempotents(base, 5, include_trivial=False) == []


@pytest.mark.parametrize('base,n', oracle_cells)
def test_enumeration_matches_brute_force(base, n):
    residues = [int(s.residue) for s in enumerate_idempotents(base, n)]
    assert residues == brute_force_idempotents(base, n)


def test_brute_force_ceiling():
    with pytest.raises(OracleTooLargeError) as info:
        brute_force_idempotents(10, 8)
    assert info.value.modulus == 10 ** 8
    assert brute_force_idempotents(10, 3, ceiling=1000) == [0, 1, 376, 625]


def test_enumerate_twin_pairs():
    pairs = enumerate_twin_pairs(10, 4)
    assert len(pairs) == 1
    assert int(pairs[0].r.residue) == 625
    assert int(pairs[0].s.residue) == 9376
    assert enumerate_twin_pairs(16, 4) == []


def test_enumerate_twin_pairs_many_primes():
    for base in (30, 210):
        m = factor_base(base).m
        for n in range(1, 6):
            pairs = enumerate_twin_pairs(base, n)
            assert len(pairs) == 2 ** (m - 1) - 1
            for pair in pairs:
                assert pair.r.selector[0] == 1
                assert pair.r.residue + pair.s.residue == base ** n + 1


def test_twin_sum():
    for base in range(2, 51):
        for n in range(1, 9):
            for solution in enumerate_idempotents(
                base, n, include_trivial=False
            ):
                twin = twin_of(solution)
                assert solution.residue + twin.residue == base ** n + 1
                assert twin_of(twin) == solution


def test_twin_of():
    s = solve_selector(factor_base(10), 4, (0, 1))
    assert int(twin_of(s).residue) == 625


def test_twin_of_trivial():
    with pytest.raises(DomainError):
        twin_of(enumerate_idempotents(10, 4)[0])


def test_extend_solution():
    factorization = factor_base(10)
    r_2 = solve_selector(factorization, 2, (1, 0))
    assert int(extend_solution(r_2, 4).residue) == 625
    s_1 = solve_selector(factorization, 1, (0, 1))
    assert int(extend_solution(s_1, 3).residue) == 376


def test_extend_solution_prefix_coherence():
    for base in (6, 10, 12, 30):
        for solution in enumerate_idempotents(base, 2):
            for n_new in range(3, 13):
                extended = extend_solution(solution, n_new)
                assert extended.residue % solution.modulus == solution.residue
                assert extended.selector == solution.selector


def test_extend_solution_every_shorter_width():
    for base in (6, 12, 30):
        factorization = factor_base(base)
        for n in range(2, 9):
            for solution in enumerate_idempotents(base, n):
                for k in range(1, n):
                    shorter = solve_selector(
                        factorization, k, solution.selector
                    )
                    assert solution.residue % base ** k == shorter.residue
                    assert extend_solution(shorter, n) == solution


def test_extend_solution_not_larger():
    solution = solve_selector(factor_base(10), 4, (1, 0))
    with pytest.raises(DomainError):
        extend_solution(solution, 4)


def test_closed_form_base10():
    assert closed_form_base10(2) == (25, 76)
    assert closed_form_base10(4) == (625, 9376)
    assert closed_form_base10(10) == (8212890625, 1787109376)


def test_closed_form_matches_crt():
    factorization = factor_base(10)
    for n in range(2, 65):
        r, s = closed_form_base10(n)
        assert r == solve_selector(factorization, n, (1, 0)).residue
        assert s == solve_selector(factorization, n, (0, 1)).residue


def test_closed_form_invalid():
    with pytest.raises(DomainError):
        closed_form_base10(1)


def test_base10_nontrivial():
    assert base10_nontrivial(1) == (5, 6)
    assert base10_nontrivial(4) == (625, 9376)


def test_inverse_of_five_mod_pow2():
    assert inverse_of_five_mod_pow2(4) == 13
    for n in range(2, 65):
        assert inverse_of_five_mod_pow2(n) == mod_inverse(5, 2 ** n)
    with pytest.raises(DomainError):
        inverse_of_five_mod_pow2(1)


def test_invariant_violation_is_not_domain_error():
    assert not issubclass(InvariantViolationError, ValueError)

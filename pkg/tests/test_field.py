from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from reeslift.field import (
    GF32003, QQ, DimensionMismatch, DivisionByZero, Field, LinearSolver, NoSolution,
    SparseEchelon, matvec, nullspace, rank, rref, solve,
)


def test_rational_arithmetic():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.inv(Fraction(-3, 7)) == Fraction(-7, 3)
    assert QQ("−3/7") == Fraction(-3, 7)


def test_prime_arithmetic():
    F = Field(7)
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F(Fraction(1, 2)) == 4
    assert F.signed(6) == -1


def test_bad_fields():
    with pytest.raises(ValueError):
        Field(2)
    with pytest.raises(ValueError):
        Field(15)
    with pytest.raises(DivisionByZero):
        GF32003.inv(0)


def test_parse_and_json():
    assert Field.parse("GF(32003)") == GF32003
    assert Field.parse("QQ") == QQ
    for F in (QQ, GF32003):
        assert Field.from_json(F.to_json()) == F
    assert str(GF32003) == "GF(32003)"


def test_rref_leftmost_pivots():
    M = [[0, 2, 4], [1, 1, 1], [1, 2, 3]]
    R, piv = rref([[Fraction(x) for x in r] for r in M], QQ)
    assert piv == [0, 1]
    assert R == [[1, 0, -1], [0, 1, 2]]


def test_nullspace_small():
    assert nullspace([[QQ(1), QQ(-1)]], QQ) == [[1, 1]]
    assert nullspace([[QQ(1), QQ(0)], [QQ(0), QQ(1)]], QQ) == []


def test_solve_errors():
    M = [[QQ(1), QQ(1)], [QQ(2), QQ(2)]]
    with pytest.raises(NoSolution):
        solve(M, [QQ(1), QQ(3)], QQ)
    with pytest.raises(DimensionMismatch):
        solve(M, [QQ(1)], QQ)


small = st.integers(-5, 5)


@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_rank_matches_sympy(nr, nc, data):
    rows = [[data.draw(small) for _ in range(nc)] for _ in range(nr)]
    ours = rank([[QQ(x) for x in r] for r in rows], QQ)
    assert ours == sympy.Matrix(rows).rank()


@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_nullspace_is_kernel_and_complete(nr, nc, data):
    for F in (QQ, Field(101)):
        rows = [[F(data.draw(small)) for _ in range(nc)] for _ in range(nr)]
        ns = nullspace(rows, F, nc)
        for v in ns:
            assert all(x == 0 for x in matvec(rows, v, F))
        assert len(ns) + rank(rows, F) == nc


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_linear_solver_matches_solve(nr, nc, data):
    F = Field(101)
    M = [[F(data.draw(small)) for _ in range(nc)] for _ in range(nr)]
    x0 = [F(data.draw(small)) for _ in range(nc)]
    b = matvec(M, x0, F)
    ls = LinearSolver(M, F, nc)
    x = ls.solve(b)
    assert matvec(M, x, F) == b
    assert x == solve(M, b, F)


def test_sparse_echelon():
    E = SparseEchelon(QQ)
    assert E.add({0: QQ(1), 1: QQ(-1)})
    assert E.add({1: QQ(1), 2: QQ(-1)})
    assert not E.add({0: QQ(1), 2: QQ(-1)})
    assert E.contains({0: QQ(2), 2: QQ(-2)})
    assert not E.contains({2: QQ(1)})
    assert len(E) == 2

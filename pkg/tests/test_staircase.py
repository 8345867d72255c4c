import pytest
from hypothesis import given, strategies as st

from conftest import STAIRCASE_17
from strategies import strata
from reeslift.staircase import (
    InvalidParameters, in_staircase, is_minimal, psi_count, staircase_min_gens,
)


def test_fixture_17():
    gens = staircase_min_gens(3, 5, 17)
    assert {g.v: g.s for g in gens} == STAIRCASE_17
    assert psi_count(gens) == 11
    assert [g.v for g in gens] == sorted(g.v for g in gens)


def test_mu1_zero():
    # weight ignores j entirely, so only j = 0 can be minimal
    gens = staircase_min_gens(0, 2, 6)
    assert all(g.j == 0 for g in gens)
    assert {g.v for g in gens} == {(4, 0, 0), (2, 0, 1), (0, 0, 2)}


def test_conic():
    gens = staircase_min_gens(0, 1, 2)
    assert [(g.v, g.s) for g in gens] == [((0, 0, 1), 0), ((1, 0, 0), 0)] or \
        sorted((g.v, g.s) for g in gens) == [((0, 0, 1), 0), ((1, 0, 0), 0)]


@pytest.mark.parametrize("bad", [(2, 1, 10), (-1, 2, 8), (2, 3, 9), (0, 1, 1)])
def test_invalid(bad):
    with pytest.raises(InvalidParameters):
        staircase_min_gens(*bad)


def _brute(mu1, mu2, d):
    top = d - mu1 - mu2
    box = range(top + 2)
    return {(i, j, k) for i in box for j in box for k in box if is_minimal((i, j, k), mu1, mu2, d)}


@given(st.sampled_from(strata(14)))
def test_complete_and_minimal(params):
    d, mu1, mu2 = params
    gens = staircase_min_gens(mu1, mu2, d)
    vs = {g.v for g in gens}
    assert vs == _brute(mu1, mu2, d)
    for g in gens:
        assert g.s >= 0
        assert g.s == g.i + (g.j + 1) * mu1 + (g.k + 1) * mu2 - d
    # every staircase monomial in a box is divisible by some generator
    for i in range(6):
        for j in range(4):
            for k in range(4):
                if in_staircase((i, j, k), mu1, mu2, d):
                    assert any(all(a <= b for a, b in zip(v, (i, j, k))) for v in vs)

import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import conic, toy4
from strategies import instance, random_poly, strata
from reeslift.mubasis import compute_mudata
from reeslift.oracle import k_slice
from reeslift.plane_rees import (
    GUARANTEED, NOT_GUARANTEED, NotInPIdeal, D_A, D_B, DD, dd_family,
    express_in_p, lift_and_check, madsen_A_lift, omega_expected, pq_forms,
    region_diagram, region_entries,
)
from reeslift.polyring import divides, embed, format_poly, tz_space
from reeslift.ringmaps import ReesMaps, apply

ADMISSIBLE = [s for s in strata(12) if s[1] > 0 and 2 * (s[1] + s[2]) < s[0]]


def test_pq_forms_conic():
    m = compute_mudata(conic())
    pf, qf = pq_forms(m)
    assert format_poly(pf) == "T1*Z0 - T0*Z1"
    assert format_poly(qf) == "T1*Z1 - T0*Z2"
    R = ReesMaps(m)
    assert apply(R.psi, pf).is_zero() and apply(R.psi, qf).is_zero()
    assert qf.multidegree("bi") == (m.d - m.mu, 1)


def test_express_in_p_examples():
    m = instance(9, 1, 3, seed=2)
    pf, _ = pq_forms(m)
    op = express_in_p(pf, m)
    sp = pf.space
    assert sum((embed(h, sp) * Fl for h, Fl in zip(m.p, op.parts)), sp.zero()) == pf
    assert op.bidegree == (m.mu, 1)
    F = sp.monomial((m.mu + m.mu2 - 1, 0, 1, 0, 0))
    assert express_in_p(F, m).bidegree == (m.mu + m.mu2 - 1, 1)
    with pytest.raises(NotInPIdeal):
        express_in_p(sp.var("Z0"), m)


def test_d_operators_kill_p():
    m = instance(10, 2, 3, seed=1)
    pf, _ = pq_forms(m)
    assert D_A(pf, m).is_zero() and D_B(pf, m).is_zero()


def test_toy4_family():
    m = toy4()
    R = ReesMaps(m)
    fam = dd_family(m, maps=R)
    assert {(x.a, x.b) for x in fam.members} == {(0, 0), (1, 0), (0, 1)}
    db = fam.by_ab()[(0, 1)]
    assert db.bidegree == (1, 2)
    assert db.poly == D_B(R.q_form, m)
    assert all(R.in_K(x.poly) for x in fam.members)
    assert all(r.ok for r in lift_and_check(m, fam, R))


def test_toy4_region():
    diag = region_diagram(toy4())
    assert diag.p_bidegree == diag.q_bidegree == (2, 1)
    assert [(e.a, e.b, e.bidegree) for e in diag.entries] == [(0, 0, (2, 1)), (1, 0, (1, 2)), (0, 1, (1, 2))]


def test_region_d22():
    ents = region_entries(22, 1, 5)
    g = {(e.a, e.b) for e in ents if e.status == GUARANTEED}
    expect = {(a, 0) for a in range(8)} | {(a, b) for b in range(1, 3) for a in range(12) if a + 5 * b <= 11}
    assert g == expect and len(g) == 17
    assert sorted(e.bidegree for e in ents if e.status == NOT_GUARANTEED) == [(6, 11), (7, 10), (8, 9)]


def test_region_mu1_zero_warns(caplog):
    m = instance(8, 0, 3, seed=3)
    diag = region_diagram(m)
    assert diag.warnings
    assert all(e.a == 0 for e in diag.entries)


def test_conic_family():
    m = compute_mudata(conic())
    fam = dd_family(m)
    assert [(x.a, x.b) for x in fam.members] == [(0, 0), (0, 1)]
    # D_B(q) is the implicit equation of the conic
    assert format_poly(fam.by_ab()[(0, 1)].poly) in {"Z1^2 - Z0*Z2", "-Z1^2 + Z0*Z2"}


@given(st.sampled_from(ADMISSIBLE), st.integers(0, 10**6))
def test_intertwining(params, seed):
    m = instance(*params, seed=seed)
    R = ReesMaps(m)
    rng = random.Random(seed)
    i = m.mu + m.mu2 - 1 + m.mu2 + rng.randint(0, 2)
    F = random_poly(tz_space(m.field), (i, rng.randint(1, 2)), rng)
    OF = apply(R.Omega, F)
    X, Y = R.scroll.var("X"), R.scroll.var("Y")
    assert apply(R.Omega, D_A(F, m)) == X * OF
    assert apply(R.Omega, D_B(F, m)) == -(Y * OF)
    assert apply(R.Omega, DD(F, m, 1, 1)) == -(X * Y * OF)
    # membership in K is preserved in both directions
    assert R.in_K(D_B(F, m)) == R.in_K(F)


@settings(max_examples=15)
@given(st.sampled_from([x for x in ADMISSIBLE if x[0] <= 9]), st.integers(0, 10**6))
def test_family_images(params, seed):
    m = instance(*params, seed=seed)
    R = ReesMaps(m)
    fam = dd_family(m, attempt=False, maps=R)
    for x in fam.members:
        assert apply(R.Omega, x.poly) == omega_expected(R, x.a, x.b)
    assert all(r.ok for r in lift_and_check(m, fam, R))


def test_madsen_lift_of_q():
    m = instance(12, 2, 3, seed=5)
    R = ReesMaps(m)
    FA = madsen_A_lift(R.q_form, m)
    X = R.scroll.var("X")
    assert apply(R.Omega, FA) == -(X * R.g)
    diff = FA - D_A(R.q_form, m)
    assert divides(R.p_form, diff)


@given(st.sampled_from(ADMISSIBLE), st.integers(0, 10**6))
def test_madsen_vs_da(params, seed):
    m = instance(*params, seed=seed)
    R = ReesMaps(m)
    rng = random.Random(seed)
    F = random_poly(tz_space(m.field), (m.mu + m.mu2 - 1 + rng.randint(0, 2), 1), rng)
    FA = madsen_A_lift(F, m)
    assert FA.is_zero() or FA.multidegree("bi") == (F.multidegree("bi")[0] - m.mu1, 2)
    assert divides(R.p_form, FA - D_A(F, m))


def test_below_bottom_generated_by_p():
    m = instance(8, 1, 2, seed=9)
    R = ReesMaps(m)
    diag = region_diagram(m)
    for i in range(m.d):
        for j in range(1, 3):
            if diag.below_bottom(i, j):
                for h in k_slice(R, (i, j)):
                    assert divides(R.p_form, h)

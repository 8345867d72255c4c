"""Minimal generators of the defining ideal I = ker Phi of the space curve.

I is generated by the scroll ideal I' together with one binomial-like
element ``Psi^t = A^t - B^t`` per staircase generator ``(i, j, k)`` and
``0 <= t <= s``, where ``A^t`` (resp. ``B^t``) is any trihomogeneous lift of
``alpha*T0^t*T1^(s-t)`` (resp. ``beta*...``) through the scroll
parametrization.  We fix a greedy lift; other choices differ by I'.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mubasis import MuData, SpaceCurve
from .polyring import MultiPoly, block_space, t_space
from .ringmaps import RingMapSpec, ReesMaps, apply
from .scroll import ScrollBasis, scroll_generators
from .staircase import StaircaseGen, staircase_min_gens


class DegreeMismatch(ValueError):
    pass


class LiftFailed(AssertionError):
    pass


@dataclass(frozen=True)
class TriLift:
    target: MultiPoly
    lift: MultiPoly
    tridegree: tuple


def _block_fill(w: int, n: int, cap: int):
    """Exponents of ``n`` block variables with indices summing to ``w``.

    Rightmost fill: as many top-index variables as possible, one partial
    variable, and the rest index 0.
    """
    e = [0] * (cap + 1)
    if n == 0:
        return e
    if cap == 0:
        e[0] = n
        return e
    q, r = divmod(w, cap)
    e[cap] += q
    rest = n - q
    if r:
        e[r] += 1
        rest -= 1
    e[0] += rest
    return e


def scroll_eval(mu1: int, mu2: int, field) -> RingMapSpec:
    """``X_i -> T0^(mu1-i) T1^i``, ``Y_i -> T0^(mu2-i) T1^i`` into ``K[T]``."""
    src = block_space(mu1, mu2, field)
    tgt = t_space(field)
    imgs = [tgt.var("T0"), tgt.var("T1")]
    imgs += [tgt.monomial((mu1 - i, i)) for i in range(mu1 + 1)]
    imgs += [tgt.monomial((mu2 - i, i)) for i in range(mu2 + 1)]
    return RingMapSpec("scroll-eval", src, tgt, tuple(imgs))


def tri_lift(h: MultiPoly, i: int, j: int, k: int, mu1: int, mu2: int) -> TriLift:
    """Greedy trihomogeneous lift of the binary form ``h`` to tridegree ``(i, j, k)``."""
    fld = h.field
    n = i + j * mu1 + k * mu2
    if h and (not h.is_homogeneous("T") or h.total_degree() != n):
        raise DegreeMismatch(f"form of degree {h.total_degree()} cannot lift to ({i},{j},{k}) with weights ({mu1},{mu2})")
    sp = block_space(mu1, mu2, fld)
    terms = {}
    for (u, v), c in h.terms.items():
        vy = min(v, k * mu2)
        vx = min(v - vy, j * mu1)
        vt = v - vy - vx
        e = (i - vt, vt) + tuple(_block_fill(vx, j, mu1)) + tuple(_block_fill(vy, k, mu2))
        terms[e] = c
    lift = MultiPoly(sp, terms, _clean=False)
    if apply(scroll_eval(mu1, mu2, fld), lift) != h:
        raise LiftFailed("lift does not map back to its target")
    if lift and lift.multidegree("tri") != (i, j, k):
        raise LiftFailed("lift is not trihomogeneous of the requested degree")
    return TriLift(h, lift, (i, j, k))


@dataclass(frozen=True)
class PsiGenerator:
    ell: int
    t: int
    stair: StaircaseGen
    A_part: MultiPoly
    B_part: MultiPoly
    value: MultiPoly

    @property
    def bidegree(self):
        i, j, k = self.stair.v
        return (i, j + k + 1)

    @property
    def label(self):
        i, j, k = self.stair.v
        return f"Psi^{self.t}_({i},{j},{k + 1})"


def psi_generator(ell: int, t: int, curve: SpaceCurve, stair: StaircaseGen, maps: ReesMaps | None = None) -> PsiGenerator:
    s = stair.s
    if not 0 <= t <= s:
        raise ValueError(f"t = {t} outside [0, {s}]")
    i, j, k = stair.v
    T = t_space(curve.field)
    mono = T.monomial((t, s - t))
    A = tri_lift(curve.alpha * mono, i, j, k + 1, curve.mu1, curve.mu2).lift
    B = tri_lift(curve.beta * mono, i, j + 1, k, curve.mu1, curve.mu2).lift
    value = A - B
    maps = maps or ReesMaps(curve)
    sc = maps.scroll
    expect = maps.g * sc.monomial((t, s - t, j, k))
    if apply(maps.PhiPrime, value) != expect:
        raise LiftFailed(f"Phi' image of Psi^{t} for {stair.v} is not g*X^j*Y^k*T0^t*T1^(s-t)")
    if apply(maps.Phi, value):
        raise LiftFailed("Psi is not in ker Phi")
    return PsiGenerator(ell, t, stair, A, B, value)


@dataclass(frozen=True)
class Generator:
    poly: MultiPoly
    bidegree: tuple
    provenance: str


@dataclass(frozen=True)
class GeneratorSet:
    curve: SpaceCurve
    scroll: ScrollBasis
    psi: tuple
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def polys(self):
        return [g.poly for g in self.elements]


def rees_space_generators(data) -> GeneratorSet:
    """Scroll generators plus the Psi family for a curve (``MuData`` or ``SpaceCurve``)."""
    curve = data.space_curve() if isinstance(data, MuData) else data
    maps = ReesMaps(curve)
    basis = scroll_generators(curve.mu1, curve.mu2, curve.field)
    elems = [Generator(g, g.multidegree("bi"), lab) for g, lab in zip(basis.elements, basis.labels)]
    psis = []
    for ell, st in enumerate(staircase_min_gens(curve.mu1, curve.mu2, curve.d)):
        for t in range(st.s + 1):
            pg = psi_generator(ell, t, curve, st, maps)
            psis.append(pg)
            elems.append(Generator(pg.value, pg.bidegree, pg.label))
    for g in elems:
        if not maps.in_I(g.poly):
            raise LiftFailed(f"{g.provenance} is not in I")
    return GeneratorSet(curve, basis, tuple(psis), tuple(elems))

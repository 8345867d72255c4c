"""Plane-curve side: the operators D_A, D_B and the family they generate.

An element ``F`` of bidegree ``(i, j)`` that lies in ``<p0, p1, p2>`` is
written ``F = sum p_l * F^(l)``; then::

    D_B(F) = det | F^(0) F^(1) F^(2) |      D_A(F) = same with the last row
                 | Z0    Z1    Z2    |               replaced by B
                 | A0    A1    A2    |

with ``Omega(D_A F) = X * Omega(F)`` and ``Omega(D_B F) = -Y * Omega(F)``.
Starting from ``q`` (``Omega(q) = -g``) this yields elements of the moving
curve ideal K in bidegree ``(d - mu - a*mu1 - b*mu2, a + b + 1)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field

from .field import LinearSolver, NoSolution
from .mubasis import InternalInconsistency, MuData, cross, mu_basis
from .polyring import MultiPoly, NotHomogeneous, embed, form_coeffs, t_space, tz_space
from .rees_space import psi_generator
from .ringmaps import ReesMaps, apply, triple_form
from .staircase import StaircaseGen

log = logging.getLogger(__name__)


class NotInPIdeal(ValueError):
    pass


class NotInPAIdeal(ValueError):
    pass


class CongruenceFailed(AssertionError):
    def __init__(self, member, msg=""):
        super().__init__(f"congruence failed for {member}: {msg}")
        self.member = member


@dataclass(frozen=True)
class DOperand:
    F: MultiPoly
    bidegree: tuple
    parts: tuple  # F^(0), F^(1), F^(2)


def pq_forms(mu: MuData):
    """``(p-form, q-form)``; the p-form is checked against its determinant formula."""
    sp = tz_space(mu.field)
    pf, qf = triple_form(mu.p, sp), triple_form(mu.q, sp)
    Z = tuple(sp.var(f"Z{j}") for j in range(3))
    A = tuple(embed(h, sp) for h in mu.A)
    B = tuple(embed(h, sp) for h in mu.B)
    det = sum((z * c for z, c in zip(Z, cross(A, B))), sp.zero())
    if det != pf:
        raise InternalInconsistency("p-form differs from det(Z; A; B)")
    return pf, qf


def _split_by_z(F: MultiPoly):
    """Group terms by Z-exponent: ``{z_exps: {T-exps: coeff}}``."""
    out = {}
    for e, c in F.terms.items():
        out.setdefault(e[2:], {})[e[:2]] = c
    return out


class _Decomposer:
    """Solve ``c(T) = sum_l gens_l(T) * h_l(T)`` for many right-hand sides."""

    def __init__(self, gens, gen_degs, target_deg, fld):
        self.fld = fld
        self.n = target_deg
        self.hdeg = [target_deg - gd for gd in gen_degs]
        cols = []
        for h, gd, hd in zip(gens, gen_degs, self.hdeg):
            if hd < 0:
                continue
            cf = form_coeffs(h, gd) if h else [fld.zero] * (gd + 1)
            for k in range(hd + 1):
                col = [fld.zero] * (target_deg + 1)
                for v, c in enumerate(cf):
                    if c:
                        col[k + v] = c
                cols.append(col)
        self.ncols = len(cols)
        M = [[cols[c][r] for c in range(self.ncols)] for r in range(target_deg + 1)]
        self.solver = LinearSolver(M, fld, self.ncols) if self.ncols else None

    def solve(self, coeffs: dict):
        rhs = [self.fld.zero] * (self.n + 1)
        for (u, v), c in coeffs.items():
            rhs[v] = c
        if self.solver is None:
            if any(rhs):
                raise NoSolution("no generators in this degree")
            return [{} for _ in self.hdeg]
        x = self.solver.solve(rhs)
        out = []
        pos = 0
        for hd in self.hdeg:
            part = {}
            if hd >= 0:
                for k in range(hd + 1):
                    if x[pos + k]:
                        part[(hd - k, k)] = x[pos + k]
                pos += hd + 1
            out.append(part)
        return out


def _decompose(F: MultiPoly, gens, gen_degs, err):
    sp = F.space
    if not F:
        return tuple(sp.zero() for _ in gens), None
    if not F.is_homogeneous("bi"):
        raise NotHomogeneous("operand must be bihomogeneous")
    i, j = F.multidegree("bi")
    dec = _Decomposer(gens, gen_degs, i, F.field)
    parts = [{} for _ in gens]
    for z, coeffs in _split_by_z(F).items():
        try:
            sol = dec.solve(coeffs)
        except NoSolution:
            raise err(f"bidegree ({i},{j}) element is not in the ideal") from None
        for l, part in enumerate(sol):
            for te, c in part.items():
                parts[l][te + z] = c
    polys = tuple(MultiPoly(sp, pt, _clean=False) for pt in parts)
    check = sum((embed(h, sp) * P for h, P in zip(gens, polys)), sp.zero())
    if check != F:
        raise InternalInconsistency("decomposition does not reproduce F")
    return polys, (i, j)


def express_in_p(F: MultiPoly, mu: MuData) -> DOperand:
    parts, bideg = _decompose(F, mu.p, [mu.mu] * 3, NotInPIdeal)
    return DOperand(F, bideg, parts)


def _det_op(F: MultiPoly, mu: MuData, row) -> MultiPoly:
    op = express_in_p(F, mu)
    sp = F.space
    Z = tuple(sp.var(f"Z{j}") for j in range(3))
    R = tuple(embed(h, sp) for h in row)
    zr = cross(Z, R)
    return sum((Fl * c for Fl, c in zip(op.parts, zr)), sp.zero())


def D_B(F: MultiPoly, mu: MuData) -> MultiPoly:
    """Bidegree ``(i - mu2, j + 1)``; ``Omega(D_B F) = -Y Omega(F)``."""
    return _det_op(F, mu, mu.A)


def D_A(F: MultiPoly, mu: MuData) -> MultiPoly:
    """Bidegree ``(i - mu1, j + 1)``; ``Omega(D_A F) = X Omega(F)``."""
    return _det_op(F, mu, mu.B)


def DD(F: MultiPoly, mu: MuData, a: int, b: int) -> MultiPoly:
    """``D_A^a D_B^b (F)`` evaluated A-first: ``a`` times D_A, then ``b`` times D_B."""
    for _ in range(a):
        F = D_A(F, mu)
    for _ in range(b):
        F = D_B(F, mu)
    return F


# ---------------------------------------------------------------------------
# region and family


GUARANTEED = "guaranteed"
NOT_GUARANTEED = "not-guaranteed"
ATTEMPTED_OK = "attempted-ok"
ATTEMPTED_FAILED = "attempted-failed"


@dataclass(frozen=True)
class RegionEntry:
    a: int
    b: int
    bidegree: tuple
    status: str


@dataclass(frozen=True)
class RegionDiagram:
    d: int
    mu: int
    mu1: int
    mu2: int
    entries: tuple
    p_bidegree: tuple
    q_bidegree: tuple
    warnings: tuple = ()

    def guaranteed(self):
        return [(e.a, e.b) for e in self.entries if e.status == GUARANTEED]

    def with_status(self, status):
        return [e for e in self.entries if e.status == status]

    def below_bottom(self, i: int, j: int) -> bool:
        """Bidegrees where K is generated by p alone."""
        return i + self.mu2 * j < self.d - self.mu1


def is_guaranteed(a: int, b: int, d: int, mu1: int, mu2: int) -> bool:
    if a == b == 0:
        return True  # q itself
    mu = mu1 + mu2
    i = d - mu - a * mu1 - b * mu2
    if b >= 1:
        return i >= mu - 1
    return i >= mu + mu2 - mu1 - 1


def region_entries(d: int, mu1: int, mu2: int):
    """Lattice points ``(a, b)`` that are guaranteed or whose bidegree has
    T-degree at least mu (the triangular region).

    For ``mu1 = 0`` only the D_B column ``a = 0`` is listed (D_A does not
    lower the T-degree, so the region would be infinite).
    """
    mu = mu1 + mu2
    out = []
    bmax = max((d - 2 * mu + 1) // mu2, 0) if mu2 else 0
    for b in range(bmax + 1):
        rest = max(d - 2 * mu + 1 - b * mu2, 0)
        amax = rest // mu1 if mu1 else 0
        for a in range(amax + 1):
            i = d - mu - a * mu1 - b * mu2
            if is_guaranteed(a, b, d, mu1, mu2):
                st = GUARANTEED
            elif i >= mu:
                st = NOT_GUARANTEED
            else:
                continue
            out.append(RegionEntry(a, b, (i, a + b + 1), st))
    return out


def region_diagram(mu: MuData) -> RegionDiagram:
    warn = ()
    if mu.mu1 == 0:
        warn = ("mu1 = 0: only the D_B column is listed; powers of D_A cannot be part of a finite generating set",)
    return RegionDiagram(mu.d, mu.mu, mu.mu1, mu.mu2, tuple(region_entries(mu.d, mu.mu1, mu.mu2)),
                         (mu.mu, 1), (mu.d - mu.mu, 1), warn)


@dataclass(frozen=True)
class FamilyMember:
    a: int
    b: int
    poly: MultiPoly
    bidegree: tuple
    status: str


@dataclass(frozen=True)
class DDFamily:
    members: tuple
    diagram: RegionDiagram
    failures: dict = dc_field(default_factory=dict)

    def by_ab(self):
        return {(m.a, m.b): m for m in self.members}


def dd_family(mu: MuData, attempt: bool = True, maps: ReesMaps | None = None) -> DDFamily:
    """The elements ``D_A^a D_B^b (q)`` over the guaranteed region.

    Guaranteed members must exist and lie in K (an exception otherwise).
    With ``attempt``, the remaining region points are tried too and marked
    ``attempted-ok`` / ``attempted-failed``.
    """
    maps = maps or ReesMaps(mu)
    diagram = region_diagram(mu)
    for w in diagram.warnings:
        log.warning(w)
    q = maps.q_form
    chain = {0: q}   # a -> D_A^a(q), or None once undefined

    def da_power(a):
        if a in chain:
            return chain[a]
        prev = da_power(a - 1)
        val = None
        if prev is not None:
            try:
                val = D_A(prev, mu)
            except NotInPIdeal:
                val = None
        chain[a] = val
        return val

    members, entries, failures = [], [], {}
    for e in diagram.entries:
        if e.status != GUARANTEED and not attempt:
            entries.append(e)
            continue
        poly = da_power(e.a)
        try:
            if poly is None:
                raise NotInPIdeal(f"D_A^{e.a}(q) undefined")
            for _ in range(e.b):
                poly = D_B(poly, mu)
        except NotInPIdeal as exc:
            if e.status == GUARANTEED:
                raise InternalInconsistency(f"guaranteed member (a,b)=({e.a},{e.b}) is undefined") from exc
            failures[(e.a, e.b)] = str(exc)
            entries.append(RegionEntry(e.a, e.b, e.bidegree, ATTEMPTED_FAILED))
            continue
        if poly and poly.multidegree("bi") != e.bidegree:
            raise InternalInconsistency(f"member ({e.a},{e.b}) has the wrong bidegree")
        ok = maps.in_K(poly) if poly else False
        if e.status == GUARANTEED:
            if not ok:
                raise InternalInconsistency(f"guaranteed member ({e.a},{e.b}) is not in K")
            status = GUARANTEED
        else:
            status = ATTEMPTED_OK if ok else ATTEMPTED_FAILED
            if not ok:
                failures[(e.a, e.b)] = "result is zero or not in K"
        entries.append(RegionEntry(e.a, e.b, e.bidegree, status))
        if ok:
            members.append(FamilyMember(e.a, e.b, poly, e.bidegree, status))
    diag = RegionDiagram(diagram.d, diagram.mu, diagram.mu1, diagram.mu2, tuple(entries),
                         diagram.p_bidegree, diagram.q_bidegree, diagram.warnings)
    return DDFamily(tuple(members), diag, failures)


def omega_expected(maps: ReesMaps, a: int, b: int) -> MultiPoly:
    """``(-1)^(b+1) X^a Y^b g``, the Omega-image of ``D_A^a D_B^b(q)``."""
    sc = maps.scroll
    m = sc.monomial((0, 0, a, b))
    out = maps.g * m
    return out if b % 2 else -out


# ---------------------------------------------------------------------------
# the alternative A-lift via a mu-basis of B


class MadsenLift:
    """``F -> F^A`` using the mu-basis ``b1, b2`` of ``B``.

    ``p^A_k = b_k . A`` and ``rho^A_k = b_k . Z``; writing
    ``F = h1 p^A_1 + h2 p^A_2`` gives ``F^A = h1 rho^A_1 + h2 rho^A_2``.
    """

    def __init__(self, mu: MuData):
        self.mu = mu
        T = t_space(mu.field)
        b1, b2, e1, e2 = mu_basis(mu.B, mu.mu2, T)
        self.b = (b1, b2)
        self.bdeg = (e1, e2)
        dot = lambda u, v: sum((x * y for x, y in zip(u, v)), T.zero())
        self.pA = (dot(b1, mu.A), dot(b2, mu.A))
        self.pA_deg = (e1 + mu.mu1, e2 + mu.mu1)
        sp = tz_space(mu.field)
        self.rho = tuple(triple_form(bk, sp) for bk in self.b)

    def __call__(self, F: MultiPoly) -> MultiPoly:
        parts, _ = _decompose(F, self.pA, list(self.pA_deg), NotInPAIdeal)
        sp = F.space
        return sum((h * r for h, r in zip(parts, self.rho)), sp.zero())


def madsen_A_lift(F: MultiPoly, mu: MuData) -> MultiPoly:
    return MadsenLift(mu)(F)


# ---------------------------------------------------------------------------
# lifting to the space side


@dataclass(frozen=True)
class LiftResult:
    a: int
    b: int
    ok: bool
    message: str = ""


def lift_and_check(mu: MuData, family: DDFamily, maps: ReesMaps | None = None, strict: bool = True):
    """Compare ``Phi'(Gamma(member))`` with ``(-1)^(b+1) Phi'(Psi^0)``.

    Since ``I' = ker Phi'`` this is exactly the congruence modulo I'.
    """
    maps = maps or ReesMaps(mu)
    sc = mu.space_curve()
    out = []
    for m in family.members:
        i = mu.d - mu.mu - m.a * mu.mu1 - m.b * mu.mu2
        psi0 = psi_generator(-1, 0, sc, StaircaseGen((i, m.a, m.b), 0), maps)
        lhs = apply(maps.PhiPrime, apply(maps.Gamma, m.poly))
        rhs = apply(maps.PhiPrime, psi0.value)
        if m.b % 2 == 0:
            rhs = -rhs
        ok = lhs == rhs
        msg = ""
        if ok and lhs != omega_expected(maps, m.a, m.b):
            ok, msg = False, "image differs from (-1)^(b+1) X^a Y^b g"
        elif not ok:
            msg = "Phi'(Gamma(F)) != (-1)^(b+1) Phi'(Psi^0)"
        if not ok and strict:
            raise CongruenceFailed((m.a, m.b), msg)
        out.append(LiftResult(m.a, m.b, ok, msg))
    return out

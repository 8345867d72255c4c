"""Brute-force linear algebra on bidegree slices.

Everything here is deliberately naive: kernels are computed as nullspaces
of the map restricted to one bidegree, and ideal membership as spans of
monomial multiples.  These serve as independent checks of the structured
constructions elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import SparseEchelon, nullspace
from .polyring import MultiPoly, VarSpace, tz_space
from .ringmaps import RingMapSpec, ReesMaps, apply

DEFAULT_BUDGET = 20_000


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class BidegreeSlice:
    space: VarSpace
    bidegree: tuple
    basis: tuple

    @classmethod
    def of(cls, space: VarSpace, bidegree, grading: str = "bi") -> "BidegreeSlice":
        if any(x < 0 for x in bidegree):
            return cls(space, tuple(bidegree), ())
        return cls(space, tuple(bidegree), tuple(space.monomials_of_degree(tuple(bidegree), grading)))

    def __len__(self):
        return len(self.basis)


def kernel_at(m: RingMapSpec, sl: BidegreeSlice):
    """Basis of the kernel of ``m`` restricted to the slice."""
    if not sl.basis:
        return []
    fld = sl.space.field
    rows: dict = {}
    cols = []
    for e in sl.basis:
        img = apply(m, MultiPoly(sl.space, {e: fld.one}, _clean=False))
        cols.append(img.terms)
        for te in img.terms:
            rows.setdefault(te, len(rows))
    M = [[fld.zero] * len(cols) for _ in range(len(rows))]
    for c, terms in enumerate(cols):
        for te, v in terms.items():
            M[rows[te]][c] = v
    if not M:
        M = [[fld.zero] * len(cols)]
    out = []
    for v in nullspace(M, fld, len(cols)):
        out.append(MultiPoly(sl.space, {e: x for e, x in zip(sl.basis, v) if x}, _clean=False))
    return out


class _Columns:
    def __init__(self):
        self.index: dict = {}

    def vec(self, f: MultiPoly) -> dict:
        idx = self.index
        out = {}
        for e, c in f.terms.items():
            k = idx.get(e)
            if k is None:
                k = idx[e] = len(idx)
            out[k] = c
        return out


def _leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def multiples_in(polys, bidegree, grading: str = "bi"):
    """All ``m * G`` of the requested bidegree, ``m`` a monomial."""
    out = []
    for G in polys:
        if not G:
            continue
        gd = G.multidegree(grading)
        if not _leq(gd, bidegree):
            continue
        diff = tuple(b - a for a, b in zip(gd, bidegree))
        for e in G.space.monomials_of_degree(diff, grading):
            out.append(G.mul_monomial(e))
    return out


def span_rank(polys, fld=None) -> int:
    polys = [p for p in polys if p]
    if not polys:
        return 0
    ech = SparseEchelon(fld or polys[0].field)
    cols = _Columns()
    for p in polys:
        ech.add(cols.vec(p))
    return len(ech)


def in_span(f: MultiPoly, polys) -> bool:
    if not f:
        return True
    ech = SparseEchelon(f.field)
    cols = _Columns()
    for p in polys:
        if p:
            ech.add(cols.vec(p))
    return ech.contains(cols.vec(f))


def same_span(a, b) -> bool:
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb == span_rank(list(a) + list(b))


def ideal_dim_at(gens, sl: BidegreeSlice, grading: str = "bi") -> int:
    """Dimension of the degree-``sl.bidegree`` part of the ideal generated by ``gens``."""
    polys = [g.poly if hasattr(g, "poly") else g for g in gens]
    return span_rank(multiples_in(polys, sl.bidegree, grading), sl.space.field)


# ---------------------------------------------------------------------------
# minimality


@dataclass(frozen=True)
class CertificateEntry:
    label: str
    bidegree: tuple
    minimal: bool


@dataclass(frozen=True)
class Certificate:
    entries: tuple
    max_entries: int

    @property
    def all_minimal(self) -> bool:
        return all(e.minimal for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.minimal]


def _normalize_gens(gens):
    out = []
    if hasattr(gens, "elements"):
        gens = gens.elements
    for n, g in enumerate(gens):
        if hasattr(g, "poly"):
            label = getattr(g, "provenance", None) or getattr(g, "label", None) or f"g{n}"
            out.append((g.poly, label))
        elif isinstance(g, tuple):
            out.append(g)
        else:
            out.append((g, f"g{n}"))
    return out


def _count(rows):
    return sum(len(r) for r in rows)


def minimality_certificate(gens, budget: int = DEFAULT_BUDGET, ambient=None) -> Certificate:
    """Check that no generator lies in the span of multiples of the others.

    ``ambient(bidegree)``, if given, returns extra polynomials added to every
    span at that bidegree (e.g. ``(m*K)`` when certifying members of K).
    The budget bounds the number of nonzero matrix entries per check.
    """
    items = _normalize_gens(gens)
    by_deg: dict = {}
    for n, (G, lab) in enumerate(items):
        by_deg.setdefault(G.multidegree("bi"), []).append(n)
    entries = []
    worst = 0
    for deg in sorted(by_deg):
        lower = [G for n, (G, _) in enumerate(items) if n not in by_deg[deg] and _leq(G.multidegree("bi"), deg)]
        base_rows = multiples_in(lower, deg)
        if ambient is not None:
            base_rows = base_rows + list(ambient(deg))
        same = [items[n][0] for n in by_deg[deg]]
        size = _count(base_rows) + _count(same)
        worst = max(worst, size)
        if size > budget:
            raise BudgetExceeded(f"bidegree {deg}: {size} entries > budget {budget}")
        fld = items[0][0].field
        cols = _Columns()
        base = SparseEchelon(fld)
        for r in base_rows:
            base.add(cols.vec(r))
        for n in by_deg[deg]:
            ech = SparseEchelon(fld)
            ech.rows = dict(base.rows)
            for m in by_deg[deg]:
                if m != n:
                    ech.add(cols.vec(items[m][0]))
            G, lab = items[n]
            entries.append((n, CertificateEntry(lab, deg, not ech.contains(cols.vec(G)))))
    entries.sort(key=lambda x: x[0])
    return Certificate(tuple(e for _, e in entries), worst)


def k_slice(maps: ReesMaps, bidegree):
    """Basis of K in one bidegree, as the kernel of psi."""
    return kernel_at(maps.psi, BidegreeSlice.of(tz_space(maps.field), bidegree))


def mK_at(maps: ReesMaps, bidegree, cache=None):
    """Spanning set of ``(m * K)`` in ``bidegree``: ``T * K_(i-1,j) + Z * K_(i,j-1)``."""
    cache = {} if cache is None else cache

    def K(b):
        if b not in cache:
            cache[b] = k_slice(maps, b) if min(b) >= 0 else []
        return cache[b]

    i, j = bidegree
    sp = tz_space(maps.field)
    out = []
    for v in ("T0", "T1"):
        x = sp.var(v)
        out += [x * h for h in K((i - 1, j))]
    for v in ("Z0", "Z1", "Z2"):
        x = sp.var(v)
        out += [x * h for h in K((i, j - 1))]
    return out


def minimality_certificate_K(maps: ReesMaps, members, budget: int = DEFAULT_BUDGET) -> Certificate:
    """Certify that each member is not in ``m*K`` plus the other members of its bidegree."""
    cache: dict = {}
    items = _normalize_gens(members)
    entries = []
    worst = 0
    for n, (G, lab) in enumerate(items):
        deg = G.multidegree("bi")
        rows = mK_at(maps, deg, cache) + [H for m, (H, _) in enumerate(items) if m != n and H.multidegree("bi") == deg]
        size = _count(rows)
        worst = max(worst, size)
        if size > budget:
            raise BudgetExceeded(f"bidegree {deg}: {size} entries > budget {budget}")
        entries.append(CertificateEntry(lab, deg, not in_span(G, rows)))
    return Certificate(tuple(entries), worst)

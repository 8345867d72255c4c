"""Generators of the scroll ideal I' = ker Phi' and their Groebner checks.

I' is generated by the 2x2 minors of::

    | T0 X0 .. X_{mu1-1}  Y0 .. Y_{mu2-1} |
    | T1 X1 .. X_{mu1}    Y1 .. Y_{mu2}   |

and the family below (pencils plus three kinds of quadrics) is a minimal
grevlex Groebner basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .field import Field, QQ
from .polyring import MultiPoly, _divides, block_space, grevlex_key


class SPairNonzero(AssertionError):
    def __init__(self, pair, remainder):
        super().__init__(f"S-pair {pair} reduces to {remainder}")
        self.pair = pair
        self.remainder = remainder


@dataclass(frozen=True)
class ScrollBasis:
    mu1: int
    mu2: int
    field: Field
    pencils: tuple
    quadrics: tuple
    labels: tuple = dc_field(default=())

    @property
    def elements(self):
        return self.pencils + self.quadrics

    @property
    def count(self) -> int:
        return len(self.pencils) + len(self.quadrics)

    @property
    def space(self):
        return block_space(self.mu1, self.mu2, self.field)

    def lead_index(self):
        return [(g.leading_monomial(), g) for g in self.elements]


def expected_count(mu1: int, mu2: int) -> int:
    return mu1 + mu2 + mu1 * (mu1 - 1) // 2 + mu2 * (mu2 - 1) // 2 + mu1 * mu2


def scroll_generators(mu1: int, mu2: int, field: Field = QQ) -> ScrollBasis:
    sp = block_space(mu1, mu2, field)
    T0, T1 = sp.var("T0"), sp.var("T1")
    X = [sp.var(f"X{i}") for i in range(mu1 + 1)]
    Y = [sp.var(f"Y{i}") for i in range(mu2 + 1)]
    pencils, quads, labels = [], [], []
    for i in range(1, mu1 + 1):
        pencils.append(T1 * X[i - 1] - T0 * X[i])
        labels.append(f"pencil X{i}")
    for j in range(1, mu2 + 1):
        pencils.append(T1 * Y[j - 1] - T0 * Y[j])
        labels.append(f"pencil Y{j}")
    for i in range(1, mu1):
        for j in range(i, mu1):
            quads.append(X[i] * X[j] - X[i - 1] * X[j + 1])
            labels.append(f"quadric X{i}X{j}")
    for i in range(1, mu2):
        for j in range(i, mu2):
            quads.append(Y[i] * Y[j] - Y[i - 1] * Y[j + 1])
            labels.append(f"quadric Y{i}Y{j}")
    for i in range(1, mu1 + 1):
        for j in range(mu2):
            quads.append(X[i] * Y[j] - X[i - 1] * Y[j + 1])
            labels.append(f"mixed X{i}Y{j}")
    return ScrollBasis(mu1, mu2, field, tuple(pencils), tuple(quads), tuple(labels))


def _reduce(f: MultiPoly, lead_index):
    """Full division remainder together with the number of reduction steps."""
    fld = f.field
    prepared = []
    for lm, b in lead_index:
        inv = fld.inv(b.terms[lm])
        prepared.append((lm, inv, [(e, c) for e, c in b.terms.items() if e != lm]))
    r = dict(f.terms)
    rem = {}
    steps = 0
    while r:
        lm = max(r, key=grevlex_key)
        for blm, inv, rest in prepared:
            if _divides(blm, lm):
                shift = tuple(a - b for a, b in zip(lm, blm))
                c = fld.canon(r.pop(lm) * inv)
                for e, ce in rest:
                    m = tuple(a + b for a, b in zip(e, shift))
                    v = fld.canon(r.get(m, 0) - c * ce)
                    if v:
                        r[m] = v
                    else:
                        r.pop(m, None)
                steps += 1
                break
        else:
            rem[lm] = r.pop(lm)
    return MultiPoly(f.space, rem, _clean=False), steps


def normal_form(F: MultiPoly, basis: ScrollBasis) -> MultiPoly:
    if not basis.elements:
        return F
    return _reduce(F, basis.lead_index())[0]


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    fld = f.field
    a = f.mul_monomial(tuple(x - y for x, y in zip(lcm, lf)), fld.inv(f.terms[lf]))
    b = g.mul_monomial(tuple(x - y for x, y in zip(lcm, lg)), fld.inv(g.terms[lg]))
    return a - b


@dataclass(frozen=True)
class BuchbergerReport:
    pairs: int
    coprime_pairs: int
    max_steps: int


def buchberger_check(basis: ScrollBasis, bound: int = 4) -> BuchbergerReport:
    """Reduce every S-pair of the basis; raise :class:`SPairNonzero` on failure.

    Pairs with coprime leading monomials are still reduced (the product
    criterion would allow skipping them) so the check stays independent.
    """
    if basis.mu2 > bound:
        raise ValueError(f"mu2 = {basis.mu2} exceeds the configured bound {bound}")
    elems = basis.elements
    idx = basis.lead_index()
    pairs = 0
    coprime = 0
    worst = 0
    for a, b in combinations(range(len(elems)), 2):
        la, lb = idx[a][0], idx[b][0]
        if all(x == 0 or y == 0 for x, y in zip(la, lb)):
            coprime += 1
        r, steps = _reduce(s_polynomial(elems[a], elems[b]), idx)
        pairs += 1
        worst = max(worst, steps)
        if r:
            raise SPairNonzero((basis.labels[a], basis.labels[b]), r)
    return BuchbergerReport(pairs, coprime, worst)


def reducible_members(basis: ScrollBasis):
    """Labels of elements whose remainder against the others is zero."""
    out = []
    elems = basis.elements
    for n, g in enumerate(elems):
        others = [(h.leading_monomial(), h) for m, h in enumerate(elems) if m != n]
        if not others or not _reduce(g, others)[0]:
            if others:
                out.append(basis.labels[n])
    return out

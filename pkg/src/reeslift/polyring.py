"""Sparse multivariate polynomials over declared variable spaces.

Every ambient ring in the construction gets its own :class:`VarSpace`:

* ``K[T]`` (binary forms),
* ``K[T, Z]`` for the plane curve,
* ``K[T, X0..X_mu1, Y0..Y_mu2]`` for the space curve,
* ``K[T, X, Y]`` for the scroll (toric bigrading),
* ``K[T, s]`` for the Rees algebras themselves.

Polynomials are immutable maps ``exponent tuple -> nonzero coefficient``.
Monomials are compared in graded reverse lexicographic order with the
variables ordered as they are declared (first variable largest).
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable

from .field import Field, QQ


class SpaceMismatch(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


class DivisorZero(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class VarSpace:
    """Ordered variables plus named gradings (``grading -> per-variable degree``)."""

    name: str
    names: tuple
    field: Field = QQ
    gradings: dict = dc_field(default_factory=dict, compare=False, hash=False)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, var: str) -> int:
        return self.names.index(var)

    def var(self, name: str) -> "MultiPoly":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return MultiPoly(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.var(n) for n in self.names]

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(1)

    def const(self, c) -> "MultiPoly":
        c = self.field(c)
        return MultiPoly(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps, coeff=1) -> "MultiPoly":
        c = self.field(coeff)
        return MultiPoly(self, {tuple(exps): c} if c else {})

    def degree_of(self, exps, grading: str = "bi"):
        table = self.gradings[grading]
        n = len(table[0])
        out = [0] * n
        for e, w in zip(exps, table):
            if e:
                for k in range(n):
                    out[k] += e * w[k]
        return tuple(out)

    def monomials_of_degree(self, deg, grading: str = "bi"):
        """All exponent vectors with the given degree in a nonnegative grading.

        Only gradings where every variable has exactly one unit entry are
        supported (the standard bi/tri gradings); the variables are
        partitioned into blocks by that entry.
        """
        table = self.gradings[grading]
        blocks = [[] for _ in table[0]]
        for v, w in enumerate(table):
            if sum(w) != 1 or min(w) < 0:
                raise ValueError(f"grading {grading!r} is not a block grading")
            blocks[w.index(1)].append(v)
        per_block = []
        for blk, dk in zip(blocks, deg):
            if dk < 0:
                return []
            if not blk:
                if dk:
                    return []
                per_block.append([()])
                continue
            opts = []
            for combo in combinations_with_replacement(blk, dk):
                opts.append(combo)
            per_block.append(opts)
        out = []

        def rec(k, acc):
            if k == len(per_block):
                e = [0] * self.nvars
                for v in acc:
                    e[v] += 1
                out.append(tuple(e))
                return
            for combo in per_block[k]:
                rec(k + 1, acc + list(combo))

        rec(0, [])
        out.sort(key=grevlex_key, reverse=True)
        return out

    def __repr__(self):
        return f"VarSpace({self.name}: {','.join(self.names)} over {self.field})"


def grevlex_key(e):
    """Sort key: larger key <=> larger monomial in grevlex."""
    return (sum(e), tuple(-x for x in reversed(e)))


def grevlex_compare(m1, m2) -> int:
    """-1, 0, 1 as ``m1`` is smaller than, equal to, larger than ``m2``."""
    if len(m1) != len(m2):
        raise SpaceMismatch("monomials live in different spaces")
    k1, k2 = grevlex_key(m1), grevlex_key(m2)
    return (k1 > k2) - (k1 < k2)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` never stores zero coefficients."""

    __slots__ = ("space", "terms", "_hash")

    def __init__(self, space: VarSpace, terms: dict | None = None, _clean=True):
        self.space = space
        if terms is None:
            terms = {}
        if _clean:
            f = space.field
            terms = {e: f.canon(c) for e, c in terms.items()}
            terms = {e: c for e, c in terms.items() if c}
        self.terms = terms
        self._hash = None

    # construction helpers -------------------------------------------------
    @property
    def field(self) -> Field:
        return self.space.field

    def _check(self, other):
        if not isinstance(other, MultiPoly):
            return self.space.const(other)
        if other.space is not self.space and other.space != self.space:
            raise SpaceMismatch(f"{self.space.name} vs {other.space.name}")
        return other

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        other = self._check(other)
        t = dict(self.terms)
        p = self.field.p
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if p:
                v %= p
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return MultiPoly(self.space, t, _clean=False)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return MultiPoly(self.space, {e: f.neg(c) for e, c in self.terms.items()}, _clean=False)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c):
        f = self.field
        c = f(c)
        if not c:
            return self.space.zero()
        return MultiPoly(self.space, {e: f.canon(x * c) for e, x in self.terms.items()}, _clean=False)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(self.field(other))
        other = self._check(other)
        if not self.terms or not other.terms:
            return self.space.zero()
        acc = {}
        get = acc.get
        add = operator.add
        small, big = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        bt = list(big.terms.items())
        for e1, c1 in small.terms.items():
            for e2, c2 in bt:
                e = tuple(map(add, e1, e2))
                acc[e] = get(e, 0) + c1 * c2
        return MultiPoly(self.space, acc)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        out = self.space.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mul_monomial(self, exps, coeff=None):
        f = self.field
        t = {}
        for e, c in self.terms.items():
            t[tuple(a + b for a, b in zip(e, exps))] = c if coeff is None else f.canon(c * coeff)
        return MultiPoly(self.space, t, _clean=coeff is not None)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.space == other.space and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.space.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.space.name, frozenset(self.terms.items())))
        return self._hash

    # order and degrees -----------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def leading_monomial(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def leading_term(self) -> "MultiPoly":
        m = self.leading_monomial()
        return MultiPoly(self.space, {m: self.terms[m]}, _clean=False)

    def monic(self) -> "MultiPoly":
        return self.scale(self.field.inv(self.leading_coefficient()))

    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def degrees(self, grading: str = "bi"):
        return {self.space.degree_of(e, grading) for e in self.terms}

    def is_homogeneous(self, grading: str = "bi") -> bool:
        return len(self.degrees(grading)) <= 1

    def multidegree(self, grading: str = "bi"):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        ds = self.degrees(grading)
        if len(ds) != 1:
            raise NotHomogeneous(f"{len(ds)} different {grading}-degrees")
        return next(iter(ds))

    def homogeneous_components(self, grading: str = "bi"):
        comps = {}
        for e, c in self.terms.items():
            comps.setdefault(self.space.degree_of(e, grading), {})[e] = c
        return {k: MultiPoly(self.space, v, _clean=False) for k, v in comps.items()}

    # evaluation / conversion ---------------------------------------------
    def evaluate(self, point):
        f = self.field
        acc = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x ** k
            acc += t
        return f.canon(acc)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def __repr__(self):
        return f"MultiPoly({self.space.name}: {format_poly(self)})"

    def __str__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# division


def try_divide(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact quotient ``f / g`` or :class:`NotDivisible`.

    A single polynomial is a Groebner basis of the ideal it generates, so the
    grevlex division algorithm leaves remainder zero iff ``g`` divides ``f``;
    we stop at the first leading term that ``LT(g)`` does not divide.
    """
    g = f._check(g)
    if g.is_zero():
        raise DivisorZero("division by the zero polynomial")
    fld = f.field
    lm_g = g.leading_monomial()
    inv_lc = fld.inv(g.terms[lm_g])
    g_rest = [(e, c) for e, c in g.terms.items() if e != lm_g]
    r = dict(f.terms)
    q = {}
    while r:
        lm = max(r, key=grevlex_key)
        if not _divides(lm_g, lm):
            raise NotDivisible("leading term not divisible")
        shift = tuple(a - b for a, b in zip(lm, lm_g))
        c = fld.canon(r.pop(lm) * inv_lc)
        q[shift] = c
        for e, ce in g_rest:
            m = tuple(a + b for a, b in zip(e, shift))
            v = fld.canon(r.get(m, 0) - c * ce)
            if v:
                r[m] = v
            else:
                r.pop(m, None)
    return MultiPoly(f.space, q, _clean=False)


def divides(g: MultiPoly, f: MultiPoly) -> bool:
    try:
        try_divide(f, g)
    except NotDivisible:
        return False
    return True


def normal_form(f: MultiPoly, basis: list, lead_index=None) -> MultiPoly:
    """Full remainder of ``f`` on division by ``basis`` under grevlex."""
    fld = f.field
    if lead_index is None:
        lead_index = [(b.leading_monomial(), b) for b in basis if b]
    prepared = []
    for lm, b in lead_index:
        inv = fld.inv(b.terms[lm])
        prepared.append((lm, inv, [(e, c) for e, c in b.terms.items() if e != lm]))
    r = dict(f.terms)
    rem = {}
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
                break
        else:
            rem[lm] = r.pop(lm)
    return MultiPoly(f.space, rem, _clean=False)


# ---------------------------------------------------------------------------
# binary forms in K[T0, T1]


def t_space(field: Field = QQ) -> VarSpace:
    return _cached_space("T", ("T0", "T1"), field, {"bi": ((1, 0), (1, 0)), "T": ((1,), (1,))})


_SPACES: dict = {}


def _cached_space(name, names, field, gradings):
    key = (name, names, field)
    sp = _SPACES.get(key)
    if sp is None:
        sp = VarSpace(name, names, field, gradings)
        _SPACES[key] = sp
    return sp


def tz_space(field: Field = QQ) -> VarSpace:
    """``K[T0, T1, Z0, Z1, Z2]`` with deg T = (1,0), deg Z = (0,1)."""
    g = {"bi": ((1, 0),) * 2 + ((0, 1),) * 3}
    return _cached_space("TZ", ("T0", "T1", "Z0", "Z1", "Z2"), field, g)


def block_space(mu1: int, mu2: int, field: Field = QQ) -> VarSpace:
    """``K[T, X0..X_mu1, Y0..Y_mu2]``; variable order is the grevlex order."""
    names = ("T0", "T1") + tuple(f"X{i}" for i in range(mu1 + 1)) + tuple(f"Y{i}" for i in range(mu2 + 1))
    nx, ny = mu1 + 1, mu2 + 1
    bi = ((1, 0),) * 2 + ((0, 1),) * (nx + ny)
    tri = ((1, 0, 0),) * 2 + ((0, 1, 0),) * nx + ((0, 0, 1),) * ny
    return _cached_space(f"TXY[{mu1},{mu2}]", names, field, {"bi": bi, "tri": tri})


def scroll_space(mu1: int, mu2: int, field: Field = QQ) -> VarSpace:
    """``K[T0, T1, X, Y]`` with the toric bigrading deg X = (-mu1,1), deg Y = (-mu2,1)."""
    bi = ((1, 0), (1, 0), (-mu1, 1), (-mu2, 1))
    xy = ((1, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))
    return _cached_space(f"Scroll[{mu1},{mu2}]", ("T0", "T1", "X", "Y"), field, {"bi": bi, "xy": xy})


def ts_space(d: int, field: Field = QQ) -> VarSpace:
    """``K[T0, T1, s]`` with deg s = (-d, 1)."""
    bi = ((1, 0), (1, 0), (-d, 1))
    return _cached_space(f"Ts[{d}]", ("T0", "T1", "s"), field, {"bi": bi, "s": ((0,), (0,), (1,))})


def embed(h: MultiPoly, target: VarSpace) -> MultiPoly:
    """Include a polynomial in ``T0, T1`` (or any prefix space) into ``target``."""
    n = target.nvars
    pad = (0,) * (n - h.space.nvars)
    if target.names[:h.space.nvars] != h.space.names:
        raise SpaceMismatch(f"{h.space.name} is not a prefix of {target.name}")
    return MultiPoly(target, {e + pad: c for e, c in h.terms.items()}, _clean=False)


def binary_form(coeffs, field: Field = QQ, space: VarSpace | None = None) -> MultiPoly:
    """Form from coefficients listed from ``T0^d`` down to ``T1^d``."""
    space = space or t_space(field)
    d = len(coeffs) - 1
    f = space.field
    terms = {}
    for k, c in enumerate(coeffs):
        c = f(c)
        if c:
            terms[(d - k, k)] = c
    return MultiPoly(space, terms, _clean=False)


def form_coeffs(h: MultiPoly, deg: int):
    """Coefficient list of a binary form of degree ``deg`` (T0^deg first)."""
    f = h.field
    out = [f.zero] * (deg + 1)
    for (u, v), c in h.terms.items():
        if u + v != deg:
            raise NotHomogeneous(f"term of degree {u + v}, expected {deg}")
        out[v] = c
    return out


def form_degree(h: MultiPoly) -> int:
    return h.multidegree("T")[0]


def _uni_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _uni_rem(a, b, fld):
    a = list(a)
    inv = fld.inv(b[-1])
    while len(a) >= len(b):
        c = fld.canon(a[-1] * inv)
        shift = len(a) - len(b)
        for k, bk in enumerate(b):
            a[shift + k] = fld.canon(a[shift + k] - c * bk)
        _uni_trim(a)
        if not a:
            break
    return a


def _uni_gcd(a, b, fld):
    a, b = _uni_trim(list(a)), _uni_trim(list(b))
    while b:
        a, b = b, _uni_rem(a, b, fld)
    return a


def gcd_binary_forms(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic gcd of two binary forms (not both zero)."""
    fld = a.field
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero forms")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()

    def split(h):
        u0 = min(u for u, _ in h.terms)
        v0 = min(v for _, v in h.terms)
        # dehomogenize T1 = 1 after removing T0^u0 T1^v0; index = T0 power
        n = max(u for u, _ in h.terms) - u0
        uni = [fld.zero] * (n + 1)
        for (u, v), c in h.terms.items():
            uni[u - u0] = c
        return u0, v0, uni

    ua, va, pa = split(a)
    ub, vb, pb = split(b)
    g = _uni_gcd(pa, pb, fld)
    n = len(g) - 1
    u0, v0 = min(ua, ub), min(va, vb)
    terms = {}
    for k, c in enumerate(g):
        if c:
            terms[(u0 + k, v0 + n - k)] = c
    return MultiPoly(a.space, terms, _clean=False).monic()


def gcd_forms(forms: Iterable[MultiPoly]) -> MultiPoly:
    forms = [h for h in forms if not h.is_zero()]
    if not forms:
        raise ValueError("gcd of zero forms")
    g = forms[0].monic()
    for h in forms[1:]:
        g = gcd_binary_forms(g, h)
    return g


# ---------------------------------------------------------------------------
# text grammar: "c*V1^e1*V2^e2" joined by " + " / " - "


def format_coeff(c, fld: Field) -> str:
    c = fld.signed(c)
    if isinstance(c, Fraction) and c.denominator == 1:
        c = c.numerator
    return str(c)


def format_poly(f: MultiPoly) -> str:
    if not f.terms:
        return "0"
    fld = f.field
    names = f.space.names
    parts = []
    for e, c in f.sorted_terms():
        c = fld.signed(c)
        neg = c < 0
        a = -c if neg else c
        if isinstance(a, Fraction) and a.denominator == 1:
            a = a.numerator
        factors = []
        for n, k in zip(names, e):
            if k == 1:
                factors.append(n)
            elif k:
                factors.append(f"{n}^{k}")
        if a != 1 or not factors:
            factors.insert(0, str(a))
        parts.append(("-" if neg else "+", "*".join(factors)))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM_RE = re.compile(r"\s*([+\-−]?)\s*([^+\-−]+)")


def parse_poly(text: str, space: VarSpace) -> MultiPoly:
    """Inverse of :func:`format_poly` (also accepts ``−`` and stray spaces)."""
    fld = space.field
    text = text.strip().replace("−", "-")
    if text in ("", "0"):
        return space.zero()
    idx = {n: i for i, n in enumerate(space.names)}
    terms = {}
    pos = 0
    for m in _TERM_RE.finditer(text):
        if m.start() != pos and text[pos:m.start()].strip():
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = m.end()
        sign, body = m.group(1), m.group(2).strip()
        coef = Fraction(1)
        e = [0] * space.nvars
        for fac in body.split("*"):
            fac = fac.strip()
            if not fac:
                raise ValueError(f"empty factor in {body!r}")
            if fac[0].isdigit():
                coef *= Fraction(fac)
                continue
            name, _, power = fac.partition("^")
            if name not in idx:
                raise ValueError(f"unknown variable {name!r} for {space.name}")
            e[idx[name]] += int(power) if power else 1
        if sign == "-":
            coef = -coef
        key = tuple(e)
        terms[key] = fld.canon(terms.get(key, 0) + fld(coef))
    return MultiPoly(space, terms)

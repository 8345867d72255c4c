"""mu-bases of a plane parametrization and of its first syzygy.

Given ``f = (f0, f1, f2)`` of degree ``d`` we compute

* the mu-basis ``p, q`` of ``f`` (degrees ``mu <= d - mu``),
* the mu-basis ``A, B`` of ``p`` (degrees ``mu1 <= mu2``, ``mu1 + mu2 = mu``),
* the forms ``alpha, beta`` with ``f = alpha*A + beta*B``.

Normalization is chosen so that everything holds on the nose:
``f = p x q`` and ``p = A x B`` (cross products, i.e. signed 2x2 minors),
``alpha = -q.B`` and ``beta = q.A``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .field import Field, QQ, nullspace, rank, rref, solve, NoSolution
from .polyring import (
    MultiPoly,
    binary_form,
    form_coeffs,
    gcd_forms,
    t_space,
)


class InvalidCurve(ValueError):
    pass


class CommonFactor(InvalidCurve):
    def __init__(self, g):
        super().__init__(f"components share the factor {g}")
        self.gcd = g


class LinearlyDependent(InvalidCurve):
    pass


class DegreeTooSmall(InvalidCurve):
    pass


class InternalInconsistency(RuntimeError):
    pass


class CommonFactorInP(InternalInconsistency):
    pass


class DecompositionMismatch(InternalInconsistency):
    pass


class GenerationFailed(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# triples of binary forms


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v):
    """Signed 2x2 minors of the matrix with rows ``u`` and ``v``."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def scale_triple(u, c):
    return tuple(x.scale(c) for x in u)


def _syz_matrix(forms, D, m, fld):
    """Matrix of ``h -> h . forms`` for ``h`` in ``K[T]_m^3``.

    Column ``l*(m+1) + k`` is the coefficient of ``T0^(m-k) T1^k`` in ``h_l``;
    row ``r`` is the coefficient of ``T0^(m+D-r) T1^r`` in the product.
    """
    rows = m + D + 1
    M = [[fld.zero] * (3 * (m + 1)) for _ in range(rows)]
    for l, form in enumerate(forms):
        cf = form_coeffs(form, D) if form else [fld.zero] * (D + 1)
        for k in range(m + 1):
            col = l * (m + 1) + k
            for v, c in enumerate(cf):
                if c:
                    M[k + v][col] = c
    return M


def _vec_to_triple(vec, m, space):
    fld = space.field
    out = []
    for l in range(3):
        terms = {}
        for k in range(m + 1):
            c = vec[l * (m + 1) + k]
            if c:
                terms[(m - k, k)] = fld.canon(c)
        out.append(MultiPoly(space, terms, _clean=False))
    return tuple(out)


def _triple_to_vec(u, m):
    out = []
    for h in u:
        out.extend(form_coeffs(h, m) if h else [h.field.zero] * (m + 1))
    return out


def _multiples(u, deg_u, m, space):
    """Vectors of ``T^k * u`` for all monomials of degree ``m - deg_u``."""
    k = m - deg_u
    out = []
    for j in range(k + 1):
        mono = space.monomial((k - j, j))
        out.append(_triple_to_vec(tuple(mono * h for h in u), m))
    return out


def _reduce(vec, R, pivots, fld):
    v = list(vec)
    for row, pc in zip(R, pivots):
        c = v[pc]
        if c:
            v = [fld.canon(a - c * b) for a, b in zip(v, row)]
    return v


def normalize_leading(u):
    """Scale so the leading coefficient of the first nonzero entry is 1."""
    for h in u:
        if h:
            return scale_triple(u, h.field.inv(h.leading_coefficient()))
    raise InternalInconsistency("zero syzygy")


def _scalar_ratio(lhs, rhs):
    """``c`` with ``lhs == c * rhs`` componentwise, or None."""
    fld = None
    c = None
    for a, b in zip(lhs, rhs):
        fld = fld or (a.field if a else b.field)
        if not b:
            if a:
                return None
            continue
        m = b.leading_monomial()
        if m not in a.terms:
            return None
        cand = fld.div(a.terms[m], b.terms[m])
        if c is None:
            c = cand
        elif c != cand:
            return None
        if a != b.scale(cand):
            return None
    return c


def syzygies_at(forms, D, m, space):
    """Basis of the degree-``m`` syzygies of three degree-``D`` forms."""
    M = _syz_matrix(forms, D, m, space.field)
    return [_vec_to_triple(v, m, space) for v in nullspace(M, space.field, 3 * (m + 1))]


def mu_basis(forms, D, space):
    """mu-basis ``(u, v, deg_u, deg_v)`` of three coprime degree-``D`` forms.

    ``u`` is the first syzygy found by increasing degree (echelon-first,
    leading-normalized); ``v`` is the first syzygy of degree ``D - deg_u``
    outside ``K[T] * u``, reduced against those multiples and scaled so that
    ``u x v == forms`` exactly.
    """
    fld = space.field
    deg_u = None
    for m in range(0, D + 1):
        M = _syz_matrix(forms, D, m, fld)
        ns = nullspace(M, fld, 3 * (m + 1))
        if ns:
            deg_u = m
            u = normalize_leading(_vec_to_triple(ns[0], m, space))
            break
    if deg_u is None:
        raise InternalInconsistency("no syzygy up to degree D")
    deg_v = D - deg_u
    if deg_v < deg_u:
        raise InternalInconsistency(f"syzygy degrees {deg_u} > {deg_v}")
    M = _syz_matrix(forms, D, deg_v, fld)
    ns = nullspace(M, fld, 3 * (deg_v + 1))
    R, piv = rref(_multiples(u, deg_u, deg_v, space), fld, 3 * (deg_v + 1))
    v = None
    for cand in ns:
        red = _reduce(cand, R, piv, fld)
        if any(red):
            v = _vec_to_triple(red, deg_v, space)
            break
    if v is None:
        raise InternalInconsistency(f"no second syzygy found in degree {deg_v}")
    c = _scalar_ratio(cross(u, v), tuple(forms))
    if c is None or c == 0:
        raise InternalInconsistency("minors of the syzygy matrix are not proportional to the input")
    v = scale_triple(v, fld.inv(c))
    return u, v, deg_u, deg_v


# ---------------------------------------------------------------------------
# curves and their syzygy data


@dataclass(frozen=True)
class ParamCurve:
    field: Field
    d: int
    f: tuple

    @classmethod
    def from_coeffs(cls, rows, field: Field = QQ) -> "ParamCurve":
        """Coefficient lists from ``T0^d`` down to ``T1^d``, one per component."""
        rows = [list(r) for r in rows]
        if len(rows) != 3:
            raise InvalidCurve("need exactly three coefficient lists")
        d = len(rows[0]) - 1
        if any(len(r) != d + 1 for r in rows):
            raise InvalidCurve("coefficient lists must all have length d + 1")
        space = t_space(field)
        return cls(field, d, tuple(binary_form(r, field, space) for r in rows))

    @property
    def space(self):
        return t_space(self.field)

    def coeff_rows(self):
        return [form_coeffs(h, self.d) if h else [self.field.zero] * (self.d + 1) for h in self.f]


def validate(curve: ParamCurve) -> None:
    """Raise unless ``d > 1``, the forms are independent and coprime."""
    if curve.d < 2:
        raise DegreeTooSmall(f"d = {curve.d} < 2")
    if rank(curve.coeff_rows(), curve.field) < 3:
        raise LinearlyDependent("f0, f1, f2 are linearly dependent")
    g = gcd_forms(curve.f)
    if g.total_degree() > 0:
        raise CommonFactor(g)


def syzygy_basis(curve: ParamCurve):
    """``(p, q, mu)`` with ``p x q == f``."""
    p, q, mu, _ = mu_basis(curve.f, curve.d, curve.space)
    return p, q, mu


def mu_split(p, mu: int, space):
    """``(A, B, mu1, mu2)`` with ``A x B == p``."""
    g = gcd_forms(p)
    if g.total_degree() > 0:
        raise CommonFactorInP(f"p has the common factor {g}")
    return mu_basis(p, mu, space)


def alpha_beta(f, q, A, B):
    alpha = -dot(q, B)
    beta = dot(q, A)
    lhs = tuple(alpha * a + beta * b for a, b in zip(A, B))
    if lhs != tuple(f):
        raise DecompositionMismatch("alpha*A + beta*B != f")
    return alpha, beta


@dataclass(frozen=True)
class MuData:
    field: Field
    d: int
    f: tuple
    p: tuple
    q: tuple
    mu: int
    A: tuple
    B: tuple
    mu1: int
    mu2: int
    alpha: MultiPoly
    beta: MultiPoly

    @property
    def space(self):
        return t_space(self.field)

    def check(self) -> None:
        """Verify every normalization identity exactly."""
        zero = self.space.zero()
        problems = []
        if dot(self.p, self.f) != zero or dot(self.q, self.f) != zero:
            problems.append("p, q are not syzygies of f")
        if dot(self.A, self.p) != zero or dot(self.B, self.p) != zero:
            problems.append("A, B are not syzygies of p")
        if cross(self.p, self.q) != tuple(self.f):
            problems.append("f != p x q")
        if cross(self.A, self.B) != tuple(self.p):
            problems.append("p != A x B")
        if tuple(self.alpha * a + self.beta * b for a, b in zip(self.A, self.B)) != tuple(self.f):
            problems.append("alpha*A + beta*B != f")
        if self.alpha != -dot(self.q, self.B) or self.beta != dot(self.q, self.A):
            problems.append("alpha, beta do not match q.B, q.A")
        if gcd_forms([self.alpha, self.beta]).total_degree() > 0:
            problems.append("gcd(alpha, beta) != 1")
        if not (0 <= self.mu1 <= self.mu2 and self.mu1 + self.mu2 == self.mu and 2 * self.mu <= self.d):
            problems.append("degree bookkeeping")
        if problems:
            raise InternalInconsistency("; ".join(problems))

    @classmethod
    def from_split(cls, A, B, alpha, beta) -> "MuData":
        """Build the data from a chosen split ``f = alpha*A + beta*B``.

        ``q`` is the solution of ``q.A = beta``, ``q.B = -alpha`` with free
        variables zeroed and reduced modulo multiples of ``p``; then
        ``p x q = (A x B) x q = beta*B + alpha*A = f`` automatically.
        """
        space = alpha.space
        fld = space.field
        mu1 = max(h.total_degree() for h in A if h)
        mu2 = max(h.total_degree() for h in B if h)
        if mu1 > mu2:
            raise InvalidCurve("need deg A <= deg B")
        mu = mu1 + mu2
        d = alpha.total_degree() + mu1
        if beta.total_degree() + mu2 != d:
            raise InvalidCurve("deg alpha + deg A != deg beta + deg B")
        p = cross(A, B)
        f = tuple(alpha * a + beta * b for a, b in zip(A, B))
        validate(ParamCurve(fld, d, f))
        m = d - mu
        top = _syz_matrix(A, mu1, m, fld)
        bot = _syz_matrix(B, mu2, m, fld)
        rhs = form_coeffs(beta, d - mu2) + [fld.neg(c) for c in form_coeffs(alpha, d - mu1)]
        try:
            x = solve(top + bot, rhs, fld)
        except NoSolution:
            raise InvalidCurve("alpha, beta do not come from a mu-basis split") from None
        R, piv = rref(_multiples(p, mu, m, space), fld, 3 * (m + 1))
        q = _vec_to_triple(_reduce(x, R, piv, fld), m, space)
        data = cls(fld, d, f, p, q, mu, tuple(A), tuple(B), mu1, mu2, alpha, beta)
        data.check()
        return data

    def space_curve(self) -> "SpaceCurve":
        return SpaceCurve(self.field, self.d, self.mu1, self.mu2, self.alpha, self.beta)


@dataclass(frozen=True)
class SpaceCurve:
    """The data ``(alpha, beta, mu1, mu2, d)`` of a curve on the scroll."""

    field: Field
    d: int
    mu1: int
    mu2: int
    alpha: MultiPoly
    beta: MultiPoly

    @property
    def mu(self):
        return self.mu1 + self.mu2

    def check(self) -> None:
        if not 0 <= self.mu1 <= self.mu2 or 2 * self.mu > self.d:
            raise InvalidCurve("need 0 <= mu1 <= mu2 and mu1 + mu2 <= d/2")
        if self.alpha.total_degree() != self.d - self.mu1 or self.beta.total_degree() != self.d - self.mu2:
            raise InvalidCurve("alpha, beta have the wrong degrees")
        if not self.alpha.is_homogeneous("T") or not self.beta.is_homogeneous("T"):
            raise InvalidCurve("alpha, beta must be homogeneous")
        if gcd_forms([self.alpha, self.beta]).total_degree() > 0:
            raise InvalidCurve("alpha and beta share a factor")

    @classmethod
    def from_coeffs(cls, d, mu1, mu2, alpha, beta, field: Field = QQ) -> "SpaceCurve":
        if len(alpha) != d - mu1 + 1 or len(beta) != d - mu2 + 1:
            raise InvalidCurve("coefficient list lengths do not match d - mu1, d - mu2")
        sp = t_space(field)
        c = cls(field, d, mu1, mu2, binary_form(alpha, field, sp), binary_form(beta, field, sp))
        c.check()
        return c


def compute_mudata(curve: ParamCurve) -> MuData:
    validate(curve)
    p, q, mu = syzygy_basis(curve)
    A, B, mu1, mu2 = mu_split(p, mu, curve.space)
    alpha, beta = alpha_beta(curve.f, q, A, B)
    data = MuData(curve.field, curve.d, tuple(curve.f), p, q, mu, A, B, mu1, mu2, alpha, beta)
    data.check()
    return data


def _random_form(rng, deg, fld, space):
    if fld.p:
        coeffs = [rng.randrange(fld.p) for _ in range(deg + 1)]
    else:
        coeffs = [rng.randint(-9, 9) for _ in range(deg + 1)]
    return binary_form(coeffs, fld, space)


def generate_instance(d: int, mu1: int, mu2: int, field: Field = QQ, seed=0, attempts: int = 100):
    """Random curve ``f = alpha*A + beta*B`` whose mu-data has the requested stratum."""
    if not (0 <= mu1 <= mu2 and 2 * (mu1 + mu2) <= d and d >= 2):
        raise ValueError(f"inadmissible (d, mu1, mu2) = ({d}, {mu1}, {mu2})")
    rng = random.Random(seed)
    space = t_space(field)
    for _ in range(attempts):
        A = tuple(_random_form(rng, mu1, field, space) for _ in range(3))
        B = tuple(_random_form(rng, mu2, field, space) for _ in range(3))
        alpha = _random_form(rng, d - mu1, field, space)
        beta = _random_form(rng, d - mu2, field, space)
        if not alpha or not beta:
            continue
        if gcd_forms([alpha, beta]).total_degree() > 0:
            continue
        f = tuple(alpha * a + beta * b for a, b in zip(A, B))
        curve = ParamCurve(field, d, f)
        try:
            data = compute_mudata(curve)
        except InvalidCurve:
            continue
        if (data.mu, data.mu1, data.mu2) == (mu1 + mu2, mu1, mu2):
            return curve
    raise GenerationFailed(f"no instance for d={d}, mu1={mu1}, mu2={mu2}, field={field} in {attempts} tries")


def generate_mudata(d: int, mu1: int, mu2: int, field: Field = QQ, seed=0, attempts: int = 100) -> MuData:
    """Random mu-data with a prescribed split, built directly from ``f = alpha*A + beta*B``.

    Unlike :func:`generate_instance` this keeps the chosen ``A, B`` instead of
    recomputing them from ``f``, so it also reaches the strata with
    ``2*mu == d`` where the recomputed (echelon-first) ``p`` is generic.
    """
    if not (0 <= mu1 <= mu2 and 2 * (mu1 + mu2) <= d and d >= 2):
        raise ValueError(f"inadmissible (d, mu1, mu2) = ({d}, {mu1}, {mu2})")
    rng = random.Random(seed)
    space = t_space(field)
    mu = mu1 + mu2
    for _ in range(attempts):
        A = tuple(_random_form(rng, mu1, field, space) for _ in range(3))
        B = tuple(_random_form(rng, mu2, field, space) for _ in range(3))
        alpha = _random_form(rng, d - mu1, field, space)
        beta = _random_form(rng, d - mu2, field, space)
        if not alpha or not beta or not any(A) or not any(B):
            continue
        if gcd_forms([alpha, beta]).total_degree() > 0:
            continue
        p = cross(A, B)
        if not any(p) or gcd_forms(p).total_degree() > 0:
            continue
        try:
            if mu_basis(p, mu, space)[2] != mu1:
                continue
            data = MuData.from_split(A, B, alpha, beta)
        except (InvalidCurve, InternalInconsistency):
            continue
        if syzygy_basis(ParamCurve(field, d, data.f))[2] != mu:
            continue
        return data
    raise GenerationFailed(f"no split instance for d={d}, mu1={mu1}, mu2={mu2}, field={field} in {attempts} tries")

"""The six substitution homomorphisms around the scroll and the plane.

::

    K[T,Z] --Gamma--> K[T,Xblk,Yblk] --Phi'--> K[T,X,Y] --phi--> K[T,s]
       \\______________ Omega ___________________/
    psi = phi o Omega,   Phi = phi o Phi',   Omega = Phi' o Gamma

All maps fix T0, T1.  Membership in the defining ideals reduces to
divisibility by ``g = alpha*Y - beta*X`` in ``K[T,X,Y]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mubasis import MuData, SpaceCurve
from .polyring import (
    MultiPoly,
    NotHomogeneous,
    SpaceMismatch,
    VarSpace,
    block_space,
    divides,
    embed,
    form_coeffs,
    scroll_space,
    try_divide,
    ts_space,
    tz_space,
)


@dataclass(frozen=True)
class RingMapSpec:
    name: str
    source: VarSpace
    target: VarSpace
    images: tuple  # one MultiPoly in ``target`` per source variable

    def image_of(self, var: str) -> MultiPoly:
        return self.images[self.source.index(var)]

    def __call__(self, F: MultiPoly) -> MultiPoly:
        return apply(self, F)


def _monomial_image(img: MultiPoly):
    if len(img) == 1:
        (e, c), = img.terms.items()
        return e, c
    return None


def apply(m: RingMapSpec, F: MultiPoly) -> MultiPoly:
    """Substitute the images of ``m`` into ``F``."""
    if F.space != m.source:
        raise SpaceMismatch(f"{m.name} expects {m.source.name}, got {F.space.name}")
    fld = m.target.field
    mono = [_monomial_image(img) for img in m.images]
    if all(x is not None for x in mono):
        # every variable goes to a monomial: push exponent vectors directly
        out = {}
        nt = m.target.nvars
        for e, c in F.terms.items():
            exps = [0] * nt
            coef = c
            for k, ek in enumerate(e):
                if ek:
                    me, mc = mono[k]
                    for t in range(nt):
                        exps[t] += ek * me[t]
                    if mc != 1:
                        coef = coef * mc ** ek
            key = tuple(exps)
            v = fld.canon(out.get(key, 0) + coef)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return MultiPoly(m.target, out, _clean=False)
    # Split variables into those with monomial images (applied as exponent
    # shifts) and the rest, whose monomial images are memoized recursively.
    nt = m.target.nvars
    poly_vars = [k for k, x in enumerate(mono) if x is None]
    memo = {(0,) * len(poly_vars): {(0,) * nt: fld.one}}

    def image(key):
        r = memo.get(key)
        if r is None:
            n = next(n for n, x in enumerate(key) if x)
            prev = list(key)
            prev[n] -= 1
            r = (MultiPoly(m.target, image(tuple(prev)), _clean=False) * m.images[poly_vars[n]]).terms
            memo[key] = r
        return r

    groups: dict = {}
    for e, c in F.terms.items():
        key = tuple(e[k] for k in poly_vars)
        shift = [0] * nt
        coef = c
        for k, ek in enumerate(e):
            if ek and mono[k] is not None:
                me, mc = mono[k]
                for t in range(nt):
                    shift[t] += ek * me[t]
                if mc != 1:
                    coef = coef * mc ** ek
        g = groups.setdefault(key, {})
        sh = tuple(shift)
        g[sh] = fld.canon(g.get(sh, 0) + coef)
    acc = {}
    get = acc.get
    for key, shifts in groups.items():
        img = list(image(key).items())
        for sh, coef in shifts.items():
            if not coef:
                continue
            for te, tc in img:
                e = tuple(a + b for a, b in zip(te, sh))
                acc[e] = get(e, 0) + coef * tc
    return MultiPoly(m.target, acc)


# ---------------------------------------------------------------------------
# constructors


def _T_images(target):
    return [target.var("T0"), target.var("T1")]


def phi_prime(mu1: int, mu2: int, field) -> RingMapSpec:
    src = block_space(mu1, mu2, field)
    tgt = scroll_space(mu1, mu2, field)
    imgs = _T_images(tgt)
    X, Y = tgt.var("X"), tgt.var("Y")
    imgs += [tgt.monomial((mu1 - i, i, 0, 0)) * X for i in range(mu1 + 1)]
    imgs += [tgt.monomial((mu2 - i, i, 0, 0)) * Y for i in range(mu2 + 1)]
    return RingMapSpec("PhiPrime", src, tgt, tuple(imgs))


def small_phi(sc: SpaceCurve) -> RingMapSpec:
    src = scroll_space(sc.mu1, sc.mu2, sc.field)
    tgt = ts_space(sc.d, sc.field)
    s = tgt.var("s")
    imgs = _T_images(tgt) + [embed(sc.alpha, tgt) * s, embed(sc.beta, tgt) * s]
    return RingMapSpec("phi", src, tgt, tuple(imgs))


def big_phi(sc: SpaceCurve) -> RingMapSpec:
    src = block_space(sc.mu1, sc.mu2, sc.field)
    tgt = ts_space(sc.d, sc.field)
    s = tgt.var("s")
    a, b = embed(sc.alpha, tgt) * s, embed(sc.beta, tgt) * s
    imgs = _T_images(tgt)
    imgs += [tgt.monomial((sc.mu1 - i, i, 0)) * a for i in range(sc.mu1 + 1)]
    imgs += [tgt.monomial((sc.mu2 - i, i, 0)) * b for i in range(sc.mu2 + 1)]
    return RingMapSpec("Phi", src, tgt, tuple(imgs))


def gamma(mu: MuData) -> RingMapSpec:
    src = tz_space(mu.field)
    tgt = block_space(mu.mu1, mu.mu2, mu.field)
    imgs = _T_images(tgt)
    zero = tgt.zero()
    for j in range(3):
        img = zero
        if mu.A[j]:
            for i, c in enumerate(form_coeffs(mu.A[j], mu.mu1)):
                if c:
                    img = img + tgt.var(f"X{i}").scale(c)
        if mu.B[j]:
            for i, c in enumerate(form_coeffs(mu.B[j], mu.mu2)):
                if c:
                    img = img + tgt.var(f"Y{i}").scale(c)
        imgs.append(img)
    return RingMapSpec("Gamma", src, tgt, tuple(imgs))


def omega(mu: MuData) -> RingMapSpec:
    src = tz_space(mu.field)
    tgt = scroll_space(mu.mu1, mu.mu2, mu.field)
    X, Y = tgt.var("X"), tgt.var("Y")
    imgs = _T_images(tgt) + [embed(mu.A[j], tgt) * X + embed(mu.B[j], tgt) * Y for j in range(3)]
    return RingMapSpec("Omega", src, tgt, tuple(imgs))


def psi(mu: MuData) -> RingMapSpec:
    src = tz_space(mu.field)
    tgt = ts_space(mu.d, mu.field)
    s = tgt.var("s")
    imgs = _T_images(tgt) + [embed(mu.f[j], tgt) * s for j in range(3)]
    return RingMapSpec("psi", src, tgt, tuple(imgs))


def triple_form(u, space=None) -> MultiPoly:
    """``u0*Z0 + u1*Z1 + u2*Z2`` in ``K[T,Z]``."""
    fld = u[0].field
    space = space or tz_space(fld)
    return sum((embed(h, space) * space.var(f"Z{j}") for j, h in enumerate(u)), space.zero())


@dataclass(frozen=True)
class GForm:
    g: MultiPoly

    @classmethod
    def of(cls, sc: SpaceCurve) -> "GForm":
        tgt = scroll_space(sc.mu1, sc.mu2, sc.field)
        return cls(embed(sc.alpha, tgt) * tgt.var("Y") - embed(sc.beta, tgt) * tgt.var("X"))


class ReesMaps:
    """All maps and distinguished forms attached to one instance.

    Built from a :class:`MuData` (all six maps) or a bare
    :class:`SpaceCurve` (only the scroll-side maps).
    """

    def __init__(self, data):
        if isinstance(data, MuData):
            self.mu = data
            sc = data.space_curve()
        else:
            self.mu = None
            sc = data
        self.curve = sc
        self.field = sc.field
        self.PhiPrime = phi_prime(sc.mu1, sc.mu2, sc.field)
        self.phi = small_phi(sc)
        self.Phi = big_phi(sc)
        self.g = GForm.of(sc).g
        if self.mu is not None:
            self.Gamma = gamma(self.mu)
            self.Omega = omega(self.mu)
            self.psi = psi(self.mu)
            self.p_form = triple_form(self.mu.p)
            self.q_form = triple_form(self.mu.q)

    @property
    def block(self):
        return self.PhiPrime.source

    @property
    def scroll(self):
        return self.PhiPrime.target

    def _need_plane(self):
        if self.mu is None:
            raise SpaceMismatch("plane-side maps need the full mu-data")

    def g_quotient(self, image: MultiPoly) -> MultiPoly:
        return try_divide(image, self.g)

    def in_I(self, F: MultiPoly) -> bool:
        if not F.is_homogeneous("bi"):
            raise NotHomogeneous("in_I needs a bihomogeneous polynomial")
        return divides(self.g, apply(self.PhiPrime, F))

    def in_K(self, F: MultiPoly) -> bool:
        self._need_plane()
        if not F.is_homogeneous("bi"):
            raise NotHomogeneous("in_K needs a bihomogeneous polynomial")
        return divides(self.g, apply(self.Omega, F))

    def in_ker_omega(self, F: MultiPoly) -> bool:
        self._need_plane()
        return divides(self.p_form, F)


def in_I(maps: ReesMaps, F: MultiPoly) -> bool:
    return maps.in_I(F)


def in_K(maps: ReesMaps, F: MultiPoly) -> bool:
    return maps.in_K(F)


def in_ker_omega(maps: ReesMaps, F: MultiPoly) -> bool:
    return maps.in_ker_omega(F)

"""Macaulay2 scripts that recompute our ideals independently.

The scripts are plain text; running them needs a Macaulay2 installation.
"""

from __future__ import annotations

from .field import Field
from .mubasis import MuData, SpaceCurve
from .polyring import format_poly


def _coeff_ring(fld: Field) -> str:
    return f"ZZ/{fld.p}" if fld.p else "QQ"


def _header(fld: Field, title: str):
    return [f"-- {title}", f"kk = {_coeff_ring(fld)};"]


def space_script(curve: SpaceCurve, gens) -> str:
    """Script checking that ``gens`` generate ker Phi minimally."""
    mu1, mu2 = curve.mu1, curve.mu2
    xs = [f"X{i}" for i in range(mu1 + 1)]
    ys = [f"Y{i}" for i in range(mu2 + 1)]
    lines = _header(curve.field, f"space curve d={curve.d} mu1={mu1} mu2={mu2}")
    lines.append("S = kk[T0,T1,s];")
    lines.append(f"R = kk[T0,T1,{','.join(xs + ys)}];")
    lines.append(f"alpha = sub(({format_poly(curve.alpha)}), S);")
    lines.append(f"beta = sub(({format_poly(curve.beta)}), S);")
    imgs = ["T0", "T1"]
    imgs += [f"alpha*T0^{mu1 - i}*T1^{i}*s" for i in range(mu1 + 1)]
    imgs += [f"beta*T0^{mu2 - i}*T1^{i}*s" for i in range(mu2 + 1)]
    lines.append(f"Phi = map(S, R, {{{', '.join(imgs)}}});")
    lines.append("I = ker Phi;")
    polys = [g.poly if hasattr(g, "poly") else g for g in gens]
    lines.append("G = ideal(")
    lines.append(",\n".join(f"  {format_poly(p)}" for p in polys))
    lines.append(");")
    lines.append("assert(G == I);")
    lines.append(f"assert(numgens trim G == {len(polys)});")
    lines.append("-- per-generator membership")
    lines.append("scan(flatten entries gens G, g -> assert(Phi(g) == 0));")
    return "\n".join(lines) + "\n"


def plane_script(mu: MuData, members) -> str:
    """Script checking that every family member lies in ker psi."""
    lines = _header(mu.field, f"plane curve d={mu.d} mu={mu.mu} split=({mu.mu1},{mu.mu2})")
    lines.append("S = kk[T0,T1,s];")
    lines.append("R = kk[T0,T1,Z0,Z1,Z2];")
    fs = [f"sub(({format_poly(h)}), S)*s" for h in mu.f]
    lines.append(f"psi = map(S, R, {{T0, T1, {', '.join(fs)}}});")
    lines.append("K = ker psi;")
    for m in members:
        lab, poly = (m if isinstance(m, tuple) else (f"({m.a},{m.b})", m.poly))
        lines.append(f"-- member {lab}")
        lines.append(f"assert(psi({format_poly(poly)}) == 0);")
    return "\n".join(lines) + "\n"

"""Command line entry point ``rees-lift``.

Exit codes: 0 ok, 2 bad input or parameters, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .field import Field
from .io import InstanceError, dumps, load
from .m2 import plane_script, space_script
from .mubasis import (
    GenerationFailed,
    InternalInconsistency,
    InvalidCurve,
    ParamCurve,
    SpaceCurve,
    compute_mudata,
    generate_instance,
)
from .plane_rees import (
    CongruenceFailed,
    GUARANTEED,
    dd_family,
    lift_and_check,
    pq_forms,
    region_diagram,
)
from .polyring import format_poly
from .rees_space import LiftFailed, rees_space_generators
from .ringmaps import ReesMaps
from .scroll import SPairNonzero, scroll_generators
from .staircase import InvalidParameters, psi_count, staircase_min_gens

log = logging.getLogger("reeslift")


class UsageError(ValueError):
    pass


def _triple(u):
    return "(" + ", ".join(format_poly(h) for h in u) + ")"


def _load(args):
    if not args.input:
        raise UsageError("--input is required")
    return load(args.input)


def _plane(args) -> ParamCurve:
    inst = _load(args)
    if not isinstance(inst, ParamCurve):
        raise UsageError("this command needs a plane-curve instance")
    return inst


def _mudata(args):
    return compute_mudata(_plane(args))


# ---------------------------------------------------------------------------
# commands


def cmd_mu(args):
    m = _mudata(args)
    return "\n".join([
        f"field: {m.field}",
        f"d = {m.d}",
        f"mu = {m.mu}",
        f"p = {_triple(m.p)}",
        f"q = {_triple(m.q)}",
        f"mu1 = {m.mu1}",
        f"mu2 = {m.mu2}",
        f"A = {_triple(m.A)}",
        f"B = {_triple(m.B)}",
        f"alpha = {format_poly(m.alpha)}",
        f"beta = {format_poly(m.beta)}",
    ])


def _space_curve(args) -> SpaceCurve:
    inst = _load(args)
    if isinstance(inst, ParamCurve):
        return compute_mudata(inst).space_curve()
    return inst


def cmd_space_gens(args):
    G = rees_space_generators(_space_curve(args))
    if args.format == "m2":
        return space_script(G.curve, G.elements).rstrip("\n")
    out = [f"# {len(G)} generators ({G.scroll.count} scroll, {len(G.psi)} psi)"]
    for g in G.elements:
        out.append(f"[{g.provenance}] bidegree {g.bidegree}: {format_poly(g.poly)}")
    return "\n".join(out)


def cmd_plane_gens(args):
    m = _mudata(args)
    maps = ReesMaps(m)
    fam = dd_family(m, maps=maps)
    pf, _ = pq_forms(m)
    if args.format == "m2":
        return plane_script(m, fam.members).rstrip("\n")
    out = [f"[p] bidegree {(m.mu, 1)}: {format_poly(pf)}"]
    for w in fam.diagram.warnings:
        out.append(f"# warning: {w}")
    for mem in fam.members:
        out.append(f"[D_A^{mem.a} D_B^{mem.b} q; {mem.status}] bidegree {mem.bidegree}: {format_poly(mem.poly)}")
    return "\n".join(out)


def cmd_staircase(args):
    if args.mu1 is None or args.mu2 is None or args.d is None:
        raise UsageError("staircase needs --mu1, --mu2 and -d")
    gens = staircase_min_gens(args.mu1, args.mu2, args.d)
    if args.format == "csv":
        rows = ["i,j,k,s"] + [f"{g.i},{g.j},{g.k},{g.s}" for g in gens]
        return "\n".join(rows)
    out = [f"{g.v} s={g.s}" for g in gens]
    out.append(f"psi-count: {psi_count(gens)}")
    return "\n".join(out)


def cmd_scroll(args):
    if args.mu1 is None or args.mu2 is None:
        raise UsageError("scroll needs --mu1 and --mu2")
    if not 0 <= args.mu1 <= args.mu2:
        raise UsageError("need 0 <= mu1 <= mu2")
    fld = Field.parse(args.field)
    b = scroll_generators(args.mu1, args.mu2, fld)
    out = [f"[{lab}] {format_poly(g)}" for lab, g in zip(b.labels, b.elements)]
    out.append(f"count: {b.count}")
    return "\n".join(out)


def region_csv(diagram) -> str:
    rows = ["a,b,i,j,status"]
    rows += [f"{e.a},{e.b},{e.bidegree[0]},{e.bidegree[1]},{e.status}" for e in diagram.entries]
    return "\n".join(rows)


def region_svg(diagram) -> str:
    """Dot plot: T-degree across, Z-grade up; solid = guaranteed, open otherwise."""
    pts = [(diagram.p_bidegree, "p", True), (diagram.q_bidegree, "q", True)]
    pts += [(e.bidegree, e.status, e.status in (GUARANTEED, "attempted-ok")) for e in diagram.entries]
    imax = max(b[0] for b, _, _ in pts) + 1
    jmax = max(b[1] for b, _, _ in pts) + 1
    sc, pad = 24, 40
    W, H = pad * 2 + imax * sc, pad * 2 + jmax * sc

    def xy(b):
        return pad + b[0] * sc, H - pad - b[1] * sc

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}">',
           f'<line x1="{pad}" y1="{H - pad}" x2="{W - pad}" y2="{H - pad}" stroke="black"/>',
           f'<line x1="{pad}" y1="{H - pad}" x2="{pad}" y2="{pad}" stroke="black"/>',
           f'<text x="{W - pad}" y="{H - pad + 20}" font-size="12">T-degree</text>',
           f'<text x="4" y="{pad - 8}" font-size="12">Z-grade</text>']
    # below this line K is generated by p
    x0, y0 = xy((diagram.d - diagram.mu1, 0))
    x1, y1 = xy((0, (diagram.d - diagram.mu1) / max(diagram.mu2, 1)))
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="gray" stroke-dasharray="4"/>')
    for b, lab, solid in pts:
        x, y = xy(b)
        fill = "black" if solid else "white"
        out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="{fill}" stroke="black"><title>{lab} {b}</title></circle>')
    out.append("</svg>")
    return "\n".join(out)


def cmd_region(args):
    m = _mudata(args)
    diag = dd_family(m).diagram if args.attempt else region_diagram(m)
    if args.format == "csv":
        return region_csv(diag)
    if args.format == "svg":
        return region_svg(diag)
    out = [f"p at {diag.p_bidegree}, q at {diag.q_bidegree}"]
    for w in diag.warnings:
        out.append(f"# warning: {w}")
    out += [f"(a,b)=({e.a},{e.b}) bidegree {e.bidegree} {e.status}" for e in diag.entries]
    return "\n".join(out)


def cmd_lift_check(args):
    m = _mudata(args)
    maps = ReesMaps(m)
    fam = dd_family(m, attempt=False, maps=maps)
    res = lift_and_check(m, fam, maps, strict=False)
    out = [f"(a,b)=({r.a},{r.b}) {'pass' if r.ok else 'FAIL ' + r.message}" for r in res]
    if not all(r.ok for r in res):
        raise CongruenceFailed([(r.a, r.b) for r in res if not r.ok], "\n".join(out))
    return "\n".join(out)


def cmd_gen_instance(args):
    if args.mu1 is None or args.mu2 is None or args.d is None:
        raise UsageError("gen-instance needs --mu1, --mu2 and -d")
    fld = Field.parse(args.field)
    return dumps(generate_instance(args.d, args.mu1, args.mu2, fld, args.seed))


def cmd_export_m2(args):
    if args.what == "plane":
        m = _mudata(args)
        return plane_script(m, dd_family(m).members).rstrip("\n")
    G = rees_space_generators(_space_curve(args))
    return space_script(G.curve, G.elements).rstrip("\n")


COMMANDS = {
    "mu": cmd_mu,
    "space-gens": cmd_space_gens,
    "plane-gens": cmd_plane_gens,
    "staircase": cmd_staircase,
    "scroll": cmd_scroll,
    "region": cmd_region,
    "lift-check": cmd_lift_check,
    "gen-instance": cmd_gen_instance,
    "export-m2": cmd_export_m2,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="rees-lift", description="Rees algebra generators of parametric plane curves")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--input", "-i", help="instance JSON file")
    ap.add_argument("--mu1", type=int)
    ap.add_argument("--mu2", type=int)
    ap.add_argument("-d", type=int)
    ap.add_argument("--field", default="QQ", help="QQ or GF(p)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--format", choices=("text", "csv", "svg", "m2"), default="text")
    ap.add_argument("--what", choices=("space", "plane"), default="space", help="export-m2 target")
    ap.add_argument("--attempt", action="store_true", help="region: also try points outside the guaranteed range")
    ap.add_argument("--out", "-o", help="write output here instead of stdout")
    ap.add_argument("-v", "--verbose", action="store_true")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        text = COMMANDS[args.command](args)
    except (InstanceError, InvalidCurve, InvalidParameters, UsageError, GenerationFailed, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InternalInconsistency, LiftFailed, CongruenceFailed, SPairNonzero) as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return 3
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

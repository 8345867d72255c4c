"""Generators of I for the space curve alpha = T0^14, beta = T1^12, (mu1, mu2) = (3, 5).

Prints the staircase, the Psi family, and the oracle minimality certificate.
"""

import argparse
import time
from dataclasses import dataclass

from reeslift import QQ, SpaceCurve, rees_space_generators
from reeslift.polyring import format_poly
from reeslift.oracle import DEFAULT_BUDGET, minimality_certificate
from reeslift.staircase import psi_count, staircase_min_gens


@dataclass
class Config:
    certify: bool = True
    budget: int = DEFAULT_BUDGET


def main(cfg: Config):
    c = SpaceCurve.from_coeffs(17, 3, 5, [1] + [0] * 14, [0] * 12 + [1], QQ)
    gens = staircase_min_gens(3, 5, 17)
    print("staircase:", ", ".join(f"{g.v}:s={g.s}" for g in gens), f"(psi-count {psi_count(gens)})")
    t = time.perf_counter()
    G = rees_space_generators(c)
    print(f"{len(G)} generators: {G.scroll.count} from the scroll, {len(G.psi)} Psi")
    for p in G.psi:
        print(f"  {p.label:18s} {p.bidegree}  {format_poly(p.value)}")
    if cfg.certify:
        cert = minimality_certificate(G, cfg.budget)
        print(f"minimal: {cert.all_minimal} (largest matrix {cert.max_entries} entries)")
    print(f"{time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--no-certify", action="store_true")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    a = ap.parse_args()
    main(Config(certify=not a.no_certify, budget=a.budget))

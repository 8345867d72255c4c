"""Sweep all (d, mu1, mu2) strata up to a degree bound.

For each stratum: size of the I generating set, size of the guaranteed
DD family, how many attempted region points succeed, and whether every
lift congruence holds.  Output is CSV.
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from reeslift import GF32003, ReesMaps, dd_family, rees_space_generators
from reeslift.mubasis import compute_mudata, generate_instance, generate_mudata
from reeslift.plane_rees import ATTEMPTED_OK, lift_and_check


@dataclass
class Config:
    dmax: int = 10
    seed: int = 0
    lift: bool = True


def strata(dmax):
    for d in range(2, dmax + 1):
        for mu2 in range(1, d // 2 + 1):
            for mu1 in range(mu2 + 1):
                if 2 * (mu1 + mu2) <= d:
                    yield d, mu1, mu2


def main(cfg: Config):
    w = csv.writer(sys.stdout)
    w.writerow(["d", "mu1", "mu2", "I_gens", "psi", "dd_guaranteed", "dd_attempted_ok", "lift_ok", "seconds"])
    for d, mu1, mu2 in strata(cfg.dmax):
        t = time.perf_counter()
        if 2 * (mu1 + mu2) < d:
            m = compute_mudata(generate_instance(d, mu1, mu2, GF32003, cfg.seed))
        else:
            m = generate_mudata(d, mu1, mu2, GF32003, cfg.seed)
        G = rees_space_generators(m)
        R = ReesMaps(m)
        fam = dd_family(m, attempt=True, maps=R)
        guaranteed = [x for x in fam.members if x.status != ATTEMPTED_OK]
        lift_ok = ""
        if cfg.lift:
            fam0 = dd_family(m, attempt=False, maps=R)
            lift_ok = all(r.ok for r in lift_and_check(m, fam0, R, strict=False))
        w.writerow([d, mu1, mu2, len(G), len(G.psi), len(guaranteed),
                    len(fam.members) - len(guaranteed), lift_ok, f"{time.perf_counter() - t:.2f}"])


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dmax", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-lift", action="store_true")
    a = ap.parse_args()
    main(Config(a.dmax, a.seed, not a.no_lift))

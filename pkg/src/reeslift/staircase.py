"""Minimal monomial generators of the staircase ideal.

For fixed ``(mu1, mu2, d)`` the ideal is spanned by the monomials
``V0^i V1^j V2^k`` with weight ``i + mu1*j + mu2*k >= d - mu``.  Each minimal
generator carries the offset ``s = i + (j+1)*mu1 + (k+1)*mu2 - d``, which
counts how many Psi generators it contributes (``s + 1``).
"""

from __future__ import annotations

from dataclasses import dataclass


class InvalidParameters(ValueError):
    pass


@dataclass(frozen=True, order=True)
class StaircaseGen:
    v: tuple
    s: int

    @property
    def i(self):
        return self.v[0]

    @property
    def j(self):
        return self.v[1]

    @property
    def k(self):
        return self.v[2]


def check_parameters(mu1: int, mu2: int, d: int) -> None:
    if d < 2 or mu1 < 0 or mu1 > mu2 or 2 * (mu1 + mu2) > d:
        raise InvalidParameters(f"need 0 <= mu1 <= mu2, mu1 + mu2 <= d/2, d >= 2; got ({mu1}, {mu2}, {d})")


def in_staircase(v, mu1: int, mu2: int, d: int) -> bool:
    i, j, k = v
    return min(v) >= 0 and i + mu1 * j + mu2 * k >= d - mu1 - mu2


def is_minimal(v, mu1, mu2, d) -> bool:
    if not in_staircase(v, mu1, mu2, d):
        return False
    for n in range(3):
        w = list(v)
        w[n] -= 1
        if in_staircase(w, mu1, mu2, d):
            return False
    return True


def staircase_min_gens(mu1: int, mu2: int, d: int):
    """Minimal generators, sorted lexicographically by exponent triple."""
    check_parameters(mu1, mu2, d)
    top = d - mu1 - mu2
    jmax = -(-top // max(mu1, 1))
    kmax = -(-top // mu2) if mu2 else 0
    out = []
    for i in range(top + 1):
        for j in range(jmax + 1):
            for k in range(kmax + 1):
                v = (i, j, k)
                if is_minimal(v, mu1, mu2, d):
                    out.append(StaircaseGen(v, i + (j + 1) * mu1 + (k + 1) * mu2 - d))
    return out


def psi_count(gens) -> int:
    return sum(g.s + 1 for g in gens)

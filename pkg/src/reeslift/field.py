"""Exact coefficient fields (Q and GF(p)) and dense exact linear algebra.

Coefficients are stored as plain Python values: ``Fraction`` over Q and
``int`` residues in ``[0, p)`` over GF(p).  A :class:`Field` knows how to
canonicalize, invert and print them; polynomial code does the raw ``+``/``*``
and calls :meth:`Field.canon` afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import heapq
from math import gcd


class DivisionByZero(ZeroDivisionError):
    pass


class DimensionMismatch(ValueError):
    pass


class NoSolution(ValueError):
    """Raised by :func:`solve` when ``M x = b`` is inconsistent."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class Field:
    """Either the rationals (``p == 0``) or the prime field GF(p), p >= 3."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and (self.p < 3 or not _is_prime(self.p)):
            raise ValueError(f"GF(p) needs an odd prime, got {self.p}")

    @property
    def is_prime(self) -> bool:
        return self.p != 0

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def canon(self, x):
        if self.p:
            return x % self.p
        return x if isinstance(x, Fraction) else Fraction(x)

    def __call__(self, x):
        """Coerce an int, Fraction or string like ``"-3/7"`` into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip().replace("−", "-"))
        if self.p:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        return Fraction(x)

    def add(self, a, b):
        return self.canon(a + b)

    def sub(self, a, b):
        return self.canon(a - b)

    def mul(self, a, b):
        return self.canon(a * b)

    def neg(self, a):
        return self.canon(-a)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b) -> bool:
        return self.canon(a - b) == 0

    def signed(self, a) -> int | Fraction:
        """Representative used for printing: symmetric residue over GF(p)."""
        if self.p:
            return a - self.p if a > self.p // 2 else a
        return a

    def to_json(self):
        return {"prime": self.p} if self.p else "rational"

    @classmethod
    def from_json(cls, obj) -> "Field":
        if obj in ("rational", "rationals", "QQ", None):
            return cls(0)
        if isinstance(obj, dict) and "prime" in obj:
            return cls(int(obj["prime"]))
        if isinstance(obj, int):
            return cls(obj)
        raise ValueError(f"unknown field spec {obj!r}")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse a CLI field spec: ``QQ``/``rational`` or ``GF(p)``/``p``."""
        t = text.strip().lower()
        if t in ("qq", "q", "rational", "rationals"):
            return cls(0)
        if t.startswith("gf(") and t.endswith(")"):
            t = t[3:-1]
        return cls(int(t))

    def __str__(self):
        return f"GF({self.p})" if self.p else "QQ"


QQ = Field(0)
GF32003 = Field(32003)


# ---------------------------------------------------------------------------
# dense linear algebra


def _rref_prime(rows, ncols, p):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        pr = rows[r]
        for k in range(len(rows)):
            if k != r:
                f = rows[k][c]
                if f:
                    rk = rows[k]
                    rows[k] = [(a - f * b) % p for a, b in zip(rk, pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _content(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    return g


def _rref_rational(rows, ncols):
    # Fraction-free Gauss-Jordan on integer rows; each row is divided by its
    # content after every update to keep entries small.
    irows = []
    for row in rows:
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        irow = [int(x * den) for x in row]
        irows.append(irow)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(irows)) if irows[k][c]), None)
        if piv is None:
            continue
        irows[r], irows[piv] = irows[piv], irows[r]
        pr = irows[r]
        a = pr[c]
        for k in range(len(irows)):
            if k != r and irows[k][c]:
                b = irows[k][c]
                new = [a * x - b * y for x, y in zip(irows[k], pr)]
                g = _content(new)
                if g > 1:
                    new = [x // g for x in new]
                irows[k] = new
        pivots.append(c)
        r += 1
        if r == len(irows):
            break
    out = []
    for k, c in enumerate(pivots):
        lead = irows[k][c]
        out.append([Fraction(x, lead) for x in irows[k]])
    return out, pivots


def rref(M, field: Field, ncols: int | None = None):
    """Reduced row echelon form; returns ``(nonzero_rows, pivot_columns)``.

    Pivots are chosen leftmost-first, so the result is deterministic.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if not M:
        return [], []
    if field.p:
        return _rref_prime(M, ncols, field.p)
    return _rref_rational(M, ncols)


def rank(M, field: Field) -> int:
    return len(rref(M, field)[1])


def nullspace(M, field: Field, ncols: int | None = None):
    """Basis of ``{x : M x = 0}``, one vector per free column (in column order).

    Each basis vector has a 1 in its free column and 0 in the other free
    columns, i.e. the basis is in reduced column-echelon form.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots = rref(M, field, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for row, pc in zip(R, pivots):
            if row[free]:
                v[pc] = field.neg(row[free])
        basis.append(v)
    return basis


def solve(M, b, field: Field):
    """One solution of ``M x = b`` with all free variables set to zero."""
    nrows = len(M)
    if len(b) != nrows:
        raise DimensionMismatch(f"matrix has {nrows} rows, rhs has {len(b)}")
    ncols = len(M[0]) if M else 0
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(aug, field, ncols + 1)
    if pivots and pivots[-1] == ncols:
        raise NoSolution("inconsistent linear system")
    x = [field.zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = field.canon(row[ncols])
    return x


class LinearSolver:
    """Reusable solver for ``M x = b`` with many right-hand sides.

    Row-reduces ``M`` once while recording the row operations, so each
    subsequent solve only replays them on ``b``.
    """

    def __init__(self, M, field: Field, ncols: int | None = None):
        self.field = field
        self.nrows = len(M)
        self.ncols = ncols if ncols is not None else (len(M[0]) if M else 0)
        eye = [[field.one if i == j else field.zero for j in range(self.nrows)]
               for i in range(self.nrows)]
        aug = [list(row) + e for row, e in zip(M, eye)]
        # pivot search only in the M part; the identity part records the ops
        R, pivots = self._reduce(aug)
        self.pivots = pivots
        self.rank = len(pivots)
        self._rows = R

    def _reduce(self, aug):
        f = self.field
        rows = [list(r) for r in aug]
        pivots = []
        r = 0
        for c in range(self.ncols):
            piv = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = f.inv(rows[r][c])
            rows[r] = [f.mul(x, inv) for x in rows[r]]
            pr = rows[r]
            for k in range(len(rows)):
                if k != r and rows[k][c] != 0:
                    m = rows[k][c]
                    rows[k] = [f.canon(a - m * b) for a, b in zip(rows[k], pr)]
            pivots.append(c)
            r += 1
        return rows, pivots

    def solve(self, b):
        f = self.field
        if len(b) != self.nrows:
            raise DimensionMismatch(f"expected rhs of length {self.nrows}")
        n = self.ncols
        tb = []
        for row in self._rows:
            acc = 0
            for coef, bi in zip(row[n:], b):
                if coef and bi:
                    acc += coef * bi
            tb.append(f.canon(acc))
        for k in range(self.rank, self.nrows):
            if tb[k] != 0:
                raise NoSolution("inconsistent linear system")
        x = [f.zero] * n
        for k, pc in enumerate(self.pivots):
            x[pc] = tb[k]
        return x


def matvec(M, v, field: Field):
    return [field.canon(sum(a * b for a, b in zip(row, v) if a and b)) for row in M]


class SparseEchelon:
    """Incremental sparse row echelon form, rows stored as ``{col: value}``.

    Used by the oracle for span/rank questions on large, very sparse systems
    (binomial generators and their monomial multiples).
    """

    def __init__(self, field: Field):
        self.field = field
        self.rows: dict = {}   # pivot column -> normalized row

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Return ``vec`` reduced against the stored rows (a new dict)."""
        f = self.field
        v = dict(vec)
        rows = self.rows
        # A stored row's pivot is its smallest column, so eliminating column c
        # only touches columns > c: one increasing sweep suffices.
        heap = list(v)
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen or c not in v:
                continue
            seen.add(c)
            row = rows.get(c)
            if row is None:
                continue
            m = v[c]
            for cc, x in row.items():
                nv = f.canon(v.get(cc, 0) - m * x)
                if nv:
                    if cc not in v:
                        heapq.heappush(heap, cc)
                    v[cc] = nv
                else:
                    v.pop(cc, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; returns True iff it increased the rank."""
        v = self.reduce(vec)
        if not v:
            return False
        f = self.field
        pc = min(v)
        inv = f.inv(v[pc])
        self.rows[pc] = {c: f.mul(x, inv) for c, x in v.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

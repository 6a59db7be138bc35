"""Exact rational linear algebra: row reduction, lattice helpers, simplex.

Everything operates on tuples of ``fractions.Fraction``; no floats enter at
any point.  Matrices are tuples of row tuples.  The simplex solver is a
plain Bland-rule tableau implementation, adequate for the desk-scale
feasibility and bounding problems of this package (tens of variables).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Parse an exact rational from an int, a Fraction, or a 'p/q' string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r} (floats are not accepted)")


def vec(xs: Iterable) -> Vec:
    return tuple(frac(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Mat:
    return tuple(vec(r) for r in rows)


def zeros(n: int) -> Vec:
    return (ZERO,) * n


def add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def scale(c: Fraction, a: Vec) -> Vec:
    return tuple(c * x for x in a)


def dot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), ZERO)


def mat_vec(m: Sequence[Vec], a: Vec) -> Vec:
    return tuple(dot(row, a) for row in m)


def transpose(m: Sequence[Vec]) -> Mat:
    return tuple(zip(*m)) if m else ()


def rref(rows: Sequence[Vec]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    a = [list(r) for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ONE / a[r][c]
        a[r] = [inv * x for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(rows: Sequence[Vec]) -> int:
    return len(rref(rows)[1])


def solve_unique(a: Sequence[Vec], b: Vec) -> Optional[Vec]:
    """Solve A x = b when A has full column rank.

    Returns the unique solution, or None if the system is inconsistent.
    Raises ValueError if the solution is not unique (column-rank deficiency),
    which callers treat as malformed input rather than a numerical issue.
    """
    if not a:
        if any(x != 0 for x in b):
            return None
        return ()
    ncols = len(a[0])
    aug = [tuple(row) + (bi,) for row, bi in zip(a, b, strict=True)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None  # pivot in the constant column: inconsistent
    if len(pivots) < ncols:
        raise ValueError("solution not unique: coefficient matrix is column-rank deficient")
    x = [ZERO] * ncols
    for i, c in enumerate(pivots):
        x[c] = red[i][ncols]
    return tuple(x)


def nullspace(rows: Sequence[Vec]) -> list[Vec]:
    """Basis of the right kernel of the matrix."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(tuple(v))
    return basis


def primitive_integer(v: Vec) -> Vec:
    """Rescale a nonzero rational vector by a positive rational to the
    shortest integer vector with coprime entries (same direction)."""
    if all(x == 0 for x in v):
        raise ValueError("zero vector has no primitive rescaling")
    from math import lcm

    denom = 1
    for x in v:
        denom = lcm(denom, x.denominator)
    ints = [x.numerator * (denom // x.denominator) for x in v]
    g = 0
    for n in ints:
        g = gcd(g, abs(n))
    return tuple(Fraction(n // g) for n in ints)


def content(v: Vec) -> Fraction:
    """Positive rational c with v = c * (primitive integer vector)."""
    p = primitive_integer(v)
    for x, px in zip(v, p):
        if px != 0:
            return x / px
    raise ValueError("zero vector")


def is_integral(v: Vec) -> bool:
    return all(x.denominator == 1 for x in v)


# ---------------------------------------------------------------------------
# Exact simplex (Bland's rule).  Variables are implicitly >= 0.


class _Tableau:
    def __init__(self, a: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
        # maximize c.x subject to A x = b, x >= 0, b >= 0; the caller supplies
        # a starting identity basis in the trailing columns.
        self.a = a
        self.b = b
        self.c = c
        self.obj = ZERO
        self.basis = []

    def price_out(self) -> None:
        for i, j in enumerate(self.basis):
            cj = self.c[j]
            if cj != 0:
                self.c = [x - cj * y for x, y in zip(self.c, self.a[i])]
                self.obj -= cj * self.b[i]

    def pivot(self, row: int, col: int) -> None:
        inv = ONE / self.a[row][col]
        self.a[row] = [inv * x for x in self.a[row]]
        self.b[row] *= inv
        for i in range(len(self.a)):
            if i != row and self.a[i][col] != 0:
                f = self.a[i][col]
                self.a[i] = [x - f * y for x, y in zip(self.a[i], self.a[row])]
                self.b[i] -= f * self.b[row]
        f = self.c[col]
        if f != 0:
            self.c = [x - f * y for x, y in zip(self.c, self.a[row])]
            self.obj -= f * self.b[row]
        self.basis[row] = col

    def run(self) -> bool:
        """Simplex iterations; returns False when unbounded."""
        while True:
            col = next((j for j, cj in enumerate(self.c) if cj > 0), None)
            if col is None:
                return True
            row = None
            best = None
            for i in range(len(self.a)):
                if self.a[i][col] > 0:
                    ratio = self.b[i] / self.a[i][col]
                    key = (ratio, self.basis[i])  # Bland: smallest basis index breaks ties
                    if best is None or key < best:
                        best = key
                        row = i
            if row is None:
                return False
            self.pivot(row, col)

    def solution(self, nvars: int) -> Vec:
        x = [ZERO] * nvars
        for i, j in enumerate(self.basis):
            if j < nvars:
                x[j] = self.b[i]
        return tuple(x)


def _phase_one(a_eq: list[list[Fraction]], b_eq: list[Fraction], nvars: int) -> Optional[_Tableau]:
    m = len(a_eq)
    rows = []
    rhs = []
    for row, bi in zip(a_eq, b_eq):
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        rows.append(list(row) + [ZERO] * m)
        rhs.append(bi)
    for i in range(m):
        rows[i][nvars + i] = ONE
    cost = [ZERO] * nvars + [-ONE] * m
    t = _Tableau(rows, rhs, cost)
    t.basis = [nvars + i for i in range(m)]
    t.price_out()
    t.run()  # a feasibility objective is never unbounded
    if t.obj != 0:
        return None
    # Drive any artificial variables out of the basis where possible.
    for i, j in enumerate(t.basis):
        if j >= nvars:
            col = next((k for k in range(nvars) if t.a[i][k] != 0), None)
            if col is not None:
                t.pivot(i, col)
    return t


def lp_solve(
    objective: Vec,
    a_eq: Sequence[Vec],
    b_eq: Vec,
    maximize: bool = True,
) -> tuple[str, Optional[Fraction], Optional[Vec]]:
    """Optimize objective . x over {x >= 0 : A x = b}, exactly.

    Returns ("infeasible", None, None), ("unbounded", None, None), or
    ("optimal", value, x).
    """
    nvars = len(objective)
    t = _phase_one([list(r) for r in a_eq], list(b_eq), nvars)
    if t is None:
        return "infeasible", None, None
    # Drop artificial columns; rows still basic in an artificial are redundant.
    keep = [i for i, j in enumerate(t.basis) if j < nvars]
    t.a = [t.a[i][:nvars] for i in keep]
    t.b = [t.b[i] for i in keep]
    t.basis = [t.basis[i] for i in keep]
    sign = ONE if maximize else -ONE
    t.c = [sign * x for x in objective]
    t.obj = ZERO
    t.price_out()
    if not t.run():
        return "unbounded", None, None
    x = t.solution(nvars)
    val = dot(objective, x)
    return "optimal", val, x


def feasible_point(
    a_eq: Sequence[Vec],
    b_eq: Vec,
    nvars: int,
) -> Optional[Vec]:
    """A point x >= 0 with A x = b, or None."""
    t = _phase_one([list(r) for r in a_eq], list(b_eq), nvars)
    if t is None:
        return None
    return t.solution(nvars)

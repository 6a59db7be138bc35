"""Exact rational cone feasibility and cone/subspace intersection.

The two conventions used throughout the package are fixed here:

* ``nonneg`` coefficient mode asks for c >= 0;
* ``strictly-positive`` asks for every c_i >= eps with a shared slack
  eps >= 1 (scaling makes the bound 1 harmless).

Strict test relations ``> 0`` are homogenized the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import (
    ONE,
    ZERO,
    Vec,
    dot,
    feasible_point,
    mat,
    primitive_integer,
    vec,
)

GE = ">=0"
GT = ">0"


@dataclass(frozen=True)
class FeasibilityProblem:
    generators: tuple[Vec, ...]
    tests: tuple[tuple[Vec, str], ...]        # (functional, GE or GT)
    coefficient_mode: str                      # "nonneg" or "strictly-positive"

    def __post_init__(self):
        object.__setattr__(self, "generators", mat(self.generators))
        object.__setattr__(
            self, "tests", tuple((vec(f), rel) for f, rel in self.tests)
        )
        if self.coefficient_mode not in ("nonneg", "strictly-positive"):
            raise ValueError(f"unknown coefficient mode {self.coefficient_mode!r}")
        for _, rel in self.tests:
            if rel not in (GE, GT):
                raise ValueError(f"unknown relation {rel!r}")


def feasible(p: FeasibilityProblem) -> tuple[bool, Optional[Vec]]:
    """Decide existence of coefficients, returning a witness when feasible.

    Variables are (c_1..c_n, eps, slacks); every inequality is turned into an
    equality with its own slack and solved by exact phase-one simplex.
    """
    n = len(p.generators)
    strict_coeffs = p.coefficient_mode == "strictly-positive"
    # value of test j as a linear form in c
    forms = [tuple(dot(f, g) for g in p.generators) for f, _ in p.tests]

    ineqs: list[tuple[Vec, Fraction]] = []  # (row in (c, eps), rhs) meaning row.x >= rhs
    need_eps = strict_coeffs or any(rel == GT for _, rel in p.tests)
    for form, (_, rel) in zip(forms, p.tests):
        if rel == GE:
            ineqs.append((form + (ZERO,), ZERO))
        else:
            ineqs.append((form + (-ONE,), ZERO))  # value - eps >= 0
    if strict_coeffs:
        for i in range(n):
            row = tuple(ONE if k == i else ZERO for k in range(n)) + (-ONE,)
            ineqs.append((row, ZERO))
    if need_eps:
        ineqs.append(((ZERO,) * n + (ONE,), ONE))  # eps >= 1

    nvars = n + 1
    total = nvars + len(ineqs)
    a_eq = []
    b_eq = []
    for k, (row, rhs) in enumerate(ineqs):
        slack = tuple(-ONE if j == nvars + k else ZERO for j in range(total))
        a_eq.append(tuple(row) + slack[nvars:])
        b_eq.append(rhs)
    if not a_eq:
        witness = (ZERO,) * n if not strict_coeffs else (ONE,) * n
        return True, witness
    point = feasible_point(mat(a_eq), vec(b_eq), total)
    if point is None:
        return False, None
    return True, point[:n]


def in_nonneg_span(v: Vec, rays: Sequence[Vec]) -> bool:
    """Exact membership of v in the non-negative rational span of rays."""
    v = vec(v)
    rays = mat(rays)
    if all(x == 0 for x in v):
        return True
    if not rays:
        return False
    cols = tuple(zip(*rays))  # ambient dim x n
    return feasible_point(mat(cols), v, len(rays)) is not None


def _dedupe_rays(rays: list[Vec]) -> list[Vec]:
    seen = {}
    for r in rays:
        if any(x != 0 for x in r):
            seen.setdefault(primitive_integer(r), None)
    return list(seen)


def cone_subspace_intersection(rays: Sequence[Vec], kernels: Sequence[Vec]) -> list[Vec]:
    """Extreme rays of cone(rays) intersected with the common kernel of the
    given functionals, by the double description method.

    Each hyperplane f = 0 replaces the generator set G by
    G0 = {r : f(r) = 0} together with the combinations
    f(p) n - f(n) p for f(p) > 0 > f(n).  Output rays are primitive integer
    vectors; non-extreme survivors are filtered by exact LP membership.
    """
    gens = _dedupe_rays([vec(r) for r in rays])
    for f in kernels:
        f = vec(f)
        if not gens:
            break
        zero = [g for g in gens if dot(f, g) == 0]
        pos = [g for g in gens if dot(f, g) > 0]
        neg = [g for g in gens if dot(f, g) < 0]
        combos = [
            tuple(dot(f, p) * nx - dot(f, n) * px for px, nx in zip(p, n))
            for p in pos
            for n in neg
        ]
        gens = _dedupe_rays(zero + combos)
    # extremality filter: r must not lie in the cone of the other rays
    out = []
    for i, r in enumerate(gens):
        others = gens[:i] + gens[i + 1 :]
        if not in_nonneg_span(r, others):
            out.append(r)
    out.sort()
    return out

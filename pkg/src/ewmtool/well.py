"""Wells of dominant weights over a generator table.

A "well case" splits the generators into the pullbacks of the smaller
homogeneous space's colors (trivial character, or one opposite pair when the
subgroup has a one-dimensional central torus) and the remaining generators.
The well of a character chi collects the weights lambda with
(lambda, -chi) in the monoid; its bottom consists of the elements from which
no pullback generator can be subtracted while staying in the well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ewm import GeneratorTable, membership
from .linalg import Vec, lp_solve, vec, zeros

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class WellCase:
    table: GeneratorTable
    h_trivial: tuple[str, ...]        # pullback generators with chi = 0
    h_nontrivial: tuple[str, ...]     # pullback generators with chi != 0
    center_dim: int                   # 0 or 1

    def __post_init__(self):
        object.__setattr__(self, "h_trivial", tuple(self.h_trivial))
        object.__setattr__(self, "h_nontrivial", tuple(self.h_nontrivial))
        ids = set(self.table.ids())
        declared = set(self.h_trivial) | set(self.h_nontrivial)
        if not declared <= ids:
            raise ValueError(f"unknown generator ids {sorted(declared - ids)}")
        if len(declared) != len(self.h_trivial) + len(self.h_nontrivial):
            raise ValueError("generator classes overlap")
        for cid in self.h_trivial:
            if any(x != 0 for x in self.table.chi(cid)):
                raise ValueError(f"{cid} declared trivial but has a nonzero character")
        for cid in self.h_nontrivial:
            if all(x == 0 for x in self.table.chi(cid)):
                raise ValueError(f"{cid} declared nontrivial but has character zero")
        if self.center_dim not in (0, 1):
            raise ValueError("center_dim must be 0 or 1")
        if self.center_dim == 0 and self.h_nontrivial:
            raise ValueError("center_dim 0 admits no nontrivial pullback characters")

    @property
    def e_colors(self) -> tuple[str, ...]:
        h = set(self.h_trivial) | set(self.h_nontrivial)
        return tuple(cid for cid in self.table.ids() if cid not in h)

    def h_pair(self) -> Optional[tuple[str, str]]:
        """The opposite-character pair (D0, D1), when the case supports it."""
        if len(self.h_nontrivial) != 2:
            return None
        a, b = self.h_nontrivial
        ca, cb = self.table.chi(a), self.table.chi(b)
        if all(x == -y for x, y in zip(ca, cb)):
            return (a, b)
        return None

    def zero_well_generator_weights(self) -> list[Vec]:
        """B-weights generating the chi = 0 well as a monoid."""
        out = [self.table.omega(cid) for cid in self.h_trivial]
        pair = self.h_pair()
        if pair is not None:
            a, b = pair
            out.append(tuple(x + y for x, y in zip(self.table.omega(a), self.table.omega(b))))
        elif self.h_nontrivial:
            raise FreeMonoidError(
                "the pullback monoid is not freely generated; bottoms are undefined"
            )
        return out


class FreeMonoidError(ValueError):
    pass


@dataclass(frozen=True)
class ChiWellResult:
    chi: Vec
    lambdas: tuple[tuple[Vec, dict[str, Fraction]], ...]
    bottom: Optional[tuple[Vec, ...]] = None
    d_chi: Optional[int] = None


def free_monoid_check(w: WellCase) -> bool:
    """Freeness of the pullback weight monoid: at most two pullback
    generators may carry a nonzero character (then necessarily an opposite
    pair for a one-dimensional central torus)."""
    return len(w.h_nontrivial) <= 2


def _solutions(
    cols: list[Vec], target: Vec, bound: Optional[int]
) -> list[tuple[int, ...]]:
    """Non-negative integer solutions of sum a_j cols[j] = target with
    sum a_j <= bound; bound None means the polytope itself must be bounded.

    Enumeration is depth-first with an exact LP bound per coordinate.
    """
    n = len(cols)
    dim = len(target)
    if n == 0:
        return [()] if all(x == 0 for x in target) else []
    rows = [tuple(c[i] for c in cols) for i in range(dim)]

    if bound is None:
        # recession cone must be trivial: no nonzero a >= 0 with sum a cols = 0
        a_eq = [r + (ZERO,) for r in rows]
        a_eq.append((ONE,) * n + (-ONE,))  # sum a = t, t is the last variable
        b_eq = zeros(dim) + (ZERO,)
        status, valmax, _ = lp_solve((ZERO,) * n + (ONE,), a_eq, b_eq, maximize=True)
        if status == "unbounded":
            raise FreeMonoidError(
                "the character system has a nonzero recession direction; "
                "an explicit bound is required"
            )
        a_eq2 = [r for r in rows]
        status, val, _ = lp_solve((ONE,) * n, a_eq2, target, maximize=True)
        if status == "infeasible":
            return []
        if status == "unbounded":  # unreachable given the recession check
            raise FreeMonoidError("unbounded enumeration")
        bound = val.numerator // val.denominator

    out: list[tuple[int, ...]] = []

    def reachable(rem: list[Vec], residual: Vec, budget: int) -> bool:
        if all(x == 0 for x in residual):
            return True
        if not rem or budget <= 0:
            return False
        rows_r = [tuple(c[i] for c in rem) for i in range(dim)]
        a_eq = [r + (ZERO,) for r in rows_r]
        a_eq.append((ONE,) * len(rem) + (ONE,))  # sum a + slack = budget
        b_eq = tuple(residual) + (Fraction(budget),)
        from .linalg import feasible_point

        return feasible_point(a_eq, b_eq, len(rem) + 1) is not None

    def rec(j: int, used: int, residual: Vec, partial: list[int]) -> None:
        if j == n:
            if all(x == 0 for x in residual):
                out.append(tuple(partial))
            return
        col = cols[j]
        for a in range(bound - used + 1):
            res2 = tuple(residual[i] - a * col[i] for i in range(dim))
            if reachable(cols[j + 1 :], res2, bound - used - a):
                rec(j + 1, used + a, res2, partial + [a])

    rec(0, 0, tuple(target), [])
    return sorted(out)


def chi_well(w: WellCase, chi: Vec, bound: int) -> ChiWellResult:
    """All well elements with coefficient sum at most the bound."""
    chi = vec(chi)
    t = w.table
    ids = t.ids()
    cols = [t.chi(cid) for cid in ids]
    target = tuple(-x for x in chi)
    lams = []
    for a in _solutions(cols, target, bound):
        coeffs = {cid: Fraction(x) for cid, x in zip(ids, a)}
        lam = zeros(len(t.entries[0][1]))
        for cid, x in coeffs.items():
            lam = tuple(l + x * o for l, o in zip(lam, t.omega(cid)))
        lams.append((lam, coeffs))
    lams.sort(key=lambda p: (sum(p[0]), p[0]))
    return ChiWellResult(chi, tuple(lams))


def bottom(w: WellCase, chi: Vec) -> list[Vec]:
    """The bottom of the chi-well, by the coefficient criterion, cross-checked
    against the raw definition (no pullback generator may be subtracted)."""
    chi = vec(chi)
    t = w.table
    zero_gens = w.zero_well_generator_weights()  # validates freeness
    pair = w.h_pair()
    ids = t.ids()

    candidate_sets: list[list[str]] = []
    if w.center_dim == 1:
        a, b = pair
        candidate_sets.append([a] + list(w.e_colors))
        candidate_sets.append([b] + list(w.e_colors))
    else:
        candidate_sets.append(list(w.e_colors))

    target = tuple(-x for x in chi)
    seen: dict[Vec, dict[str, Fraction]] = {}
    for cset in candidate_sets:
        cols = [t.chi(cid) for cid in cset]
        for a in _solutions(cols, target, None):
            coeffs = {cid: Fraction(x) for cid, x in zip(cset, a)}
            lam = zeros(len(t.entries[0][1]))
            for cid, x in coeffs.items():
                lam = tuple(l + x * o for l, o in zip(lam, t.omega(cid)))
            seen.setdefault(lam, coeffs)

    # raw definition: lambda - sigma leaves the well for every 0-well generator
    for lam in seen:
        for s in zero_gens:
            shifted = tuple(x - y for x, y in zip(lam, s))
            if membership(t, (shifted, target)) is not None:
                raise FreeMonoidError(
                    "criterion and definition disagree on the bottom; "
                    "the generator classes are mis-declared"
                )
    return sorted(seen, key=lambda v: (sum(v), v))


def d_chi(w: WellCase, chi: Vec) -> int:
    return len(bottom(w, chi))


def decompose(w: WellCase, chi: Vec, lam: Vec) -> tuple[Vec, Vec]:
    """Unique splitting lambda = b + s with b in the bottom and s in the
    0-well monoid, read off the coefficient vector."""
    chi = vec(chi)
    lam = vec(lam)
    t = w.table
    w.zero_well_generator_weights()
    coeffs = membership(t, (lam, tuple(-x for x in chi)))
    if coeffs is None:
        raise ValueError("weight is not in the well")
    pair = w.h_pair()
    bcoef: dict[str, Fraction] = {}
    scoef: dict[str, Fraction] = {}
    for cid, a in coeffs.items():
        if cid in w.h_trivial:
            scoef[cid] = a
        elif pair is not None and cid in pair:
            pass
        else:
            bcoef[cid] = a
    if pair is not None:
        a0, a1 = coeffs[pair[0]], coeffs[pair[1]]
        m = min(a0, a1)
        scoef[pair[0]] = m
        scoef[pair[1]] = m
        bcoef[pair[0]] = a0 - m
        bcoef[pair[1]] = a1 - m
    rk = len(t.entries[0][1])
    b = zeros(rk)
    s = zeros(rk)
    for cid, a in bcoef.items():
        b = tuple(x + a * y for x, y in zip(b, t.omega(cid)))
    for cid, a in scoef.items():
        s = tuple(x + a * y for x, y in zip(s, t.omega(cid)))
    return b, s

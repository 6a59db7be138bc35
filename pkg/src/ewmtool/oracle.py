"""Brute-force representation-theoretic ground truth.

Weight multiplicities come from the Freudenthal recursion; branching to a
subgroup restricts every weight through an exact torus map and peels off
highest weights of the subgroup greedily.  These paths share nothing with
the linear solve in :mod:`ewmtool.ewm`, which is the point: agreement of the
two is the package's main correctness evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .ewm import GeneratorTable, membership
from .linalg import Vec, mat_vec, solve_unique, vec
from .rootlat import (
    RootSystem,
    Weight,
    build_root_system,
    is_dominant_integral,
    positive_roots,
    weyl_dimension,
)
from .well import WellCase

ZERO = Fraction(0)
ONE = Fraction(1)

RANK_CAP = 6
DEFAULT_BOUND_CAP = 8


@dataclass(frozen=True)
class CharacterTable:
    """Formal character of one irreducible: weight (fund coords) -> multiplicity."""

    entries: tuple[tuple[Vec, int], ...]

    def as_dict(self) -> dict[Vec, int]:
        return dict(self.entries)

    def total(self) -> int:
        return sum(m for _, m in self.entries)


@dataclass(frozen=True)
class BranchingSetup:
    group: RootSystem
    subgroup: RootSystem
    torus_map: tuple[Vec, ...]     # codomain rows: subgroup fund coords then central charges
    chi_extension: tuple[Vec, ...]  # PChar basis -> codomain coordinates

    def __post_init__(self):
        object.__setattr__(self, "torus_map", tuple(vec(r) for r in self.torus_map))
        object.__setattr__(self, "chi_extension", tuple(vec(r) for r in self.chi_extension))
        if any(len(r) != self.group.rank for r in self.torus_map):
            raise ValueError("torus map must have one column per ambient fundamental weight")
        if len(self.torus_map) < self.subgroup.rank:
            raise ValueError("torus map codomain smaller than the subgroup rank")

    @property
    def codim(self) -> int:
        return len(self.torus_map)

    def restrict(self, fund: Vec) -> Vec:
        return mat_vec(self.torus_map, fund)

    def chi_to_codomain(self, chi: Vec) -> Vec:
        cols = list(zip(*self.chi_extension)) if self.chi_extension else []
        if not cols:
            raise ValueError("no character identification configured")
        return mat_vec(self.chi_extension, chi)

    def chi_from_codomain(self, v: Vec) -> Optional[Vec]:
        """Preimage of a codomain character under the identification, if any."""
        return solve_unique(self.chi_extension, v)

    def positivity_violations(self) -> list[int]:
        """Ambient simple roots whose restriction is not a non-negative
        combination of subgroup simple roots plus center.

        With a lower-rank subgroup torus this is common and harmless for the
        branching algorithm; the list is informational.
        """
        from .cones import in_nonneg_span

        h = self.subgroup
        bad = []
        for i in range(1, self.group.rank + 1):
            alpha = self.group.to_fund(self.group.simple_root(i))
            img = self.restrict(alpha)
            hpart = img[: h.rank]
            root_coords = mat_vec(h.inv_cartan, hpart)
            if any(x < 0 or x.denominator != 1 for x in root_coords):
                bad.append(i)
        return bad


def _check_rank(rs: RootSystem) -> None:
    if rs.rank > RANK_CAP:
        raise ValueError(f"rank {rs.rank} exceeds the oracle cap {RANK_CAP}")


@lru_cache(maxsize=None)
def _dominant_multiplicities(spec: str, lam: Vec) -> dict[Vec, int]:
    """Freudenthal recursion: multiplicities of all dominant weights of the
    irreducible with highest weight lam (fundamental coordinates)."""
    rs = build_root_system(spec)
    n = rs.rank
    pos = [rs.to_fund(a) for a in positive_roots(rs)]
    pos_root = [tuple(a.coords) for a in positive_roots(rs)]
    rho = (ONE,) * n

    def form(a: Vec, b: Vec) -> Fraction:
        # (a, b) with a, b in fundamental coordinates
        ar = mat_vec(rs.inv_cartan, a)
        return sum((x * d * y for x, d, y in zip(ar, rs.halfnorms, b)), ZERO)

    lam_rho = tuple(x + 1 for x in lam)
    norm_top = form(lam_rho, lam_rho)

    def dominant_rep(v: Vec) -> Vec:
        v = list(v)
        while True:
            i = next((k for k in range(n) if v[k] < 0), None)
            if i is None:
                return tuple(v)
            coeff = v[i]
            col = [rs.cartan[k][i] for k in range(n)]
            for k in range(n):
                v[k] -= coeff * col[k]

    memo: dict[Vec, int] = {}

    def mult_dominant(mu: Vec) -> int:
        if mu == lam:
            return 1
        if mu in memo:
            return memo[mu]
        diff = mat_vec(rs.inv_cartan, tuple(a - b for a, b in zip(lam, mu)))
        if any(x < 0 or x.denominator != 1 for x in diff):
            memo[mu] = 0
            return 0
        mu_rho = tuple(x + 1 for x in mu)
        denom = norm_top - form(mu_rho, mu_rho)
        if denom == 0:
            memo[mu] = 0
            return 0
        acc = ZERO
        for alpha, alpha_root in zip(pos, pos_root):
            k = 1
            while True:
                nu = tuple(m + k * a for m, a in zip(mu, alpha))
                rep = dominant_rep(nu)
                m = mult_dominant(rep)
                if m == 0:
                    # weights of the irreducible along a root string are
                    # contiguous: once we leave the support we stay out
                    break
                acc += m * form(nu, alpha)
                k += 1
        val = 2 * acc / denom
        if val.denominator != 1 or val < 0:
            raise ArithmeticError("Freudenthal recursion produced a non-integer")
        memo[mu] = int(val)
        return memo[mu]

    # exhaustive scan: dominant mu = lam - sum x_j alpha_j inside the box
    # bounded by the root coordinates of lam - w0(lam)
    lam_w = Weight(lam, "fund")
    spread = tuple(
        a + b for a, b in zip(lam, rs.minus_w0(lam_w).coords)
    )  # lam - w0(lam), fund coords
    box = mat_vec(rs.inv_cartan, spread)
    if any(x < 0 or x.denominator != 1 for x in box):
        raise ArithmeticError("weight box is not integral")
    out: dict[Vec, int] = {}
    simple_fund = [tuple(rs.cartan[k][j] for k in range(n)) for j in range(n)]

    def scan(j: int, mu: Vec):
        if j == n:
            if all(x >= 0 for x in mu):
                m = mult_dominant(mu)
                if m > 0:
                    out[mu] = m
            return
        cur = mu
        for _ in range(int(box[j]) + 1):
            scan(j + 1, cur)
            cur = tuple(a - b for a, b in zip(cur, simple_fund[j]))

    scan(0, lam)
    return out


def _weyl_orbit(rs: RootSystem, v: Vec) -> set[Vec]:
    n = rs.rank
    simple_fund = [tuple(rs.cartan[k][j] for k in range(n)) for j in range(n)]
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for w in frontier:
            for j in range(n):
                coeff = w[j]
                if coeff == 0:
                    continue
                r = tuple(a - coeff * b for a, b in zip(w, simple_fund[j]))
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


def freudenthal(rs: RootSystem, lam: Weight) -> CharacterTable:
    """Full weight multiplicity table of the irreducible with highest weight
    lam; the total count equals the Weyl dimension."""
    _check_rank(rs)
    if not is_dominant_integral(rs, lam):
        raise ValueError("highest weight must be dominant integral")
    lf = rs.to_fund(lam)
    dom = _dominant_multiplicities(rs.spec_string(), lf)
    table: dict[Vec, int] = {}
    for mu, m in dom.items():
        for w in _weyl_orbit(rs, mu):
            table[w] = m
    ct = CharacterTable(tuple(sorted(table.items())))
    if ct.total() != weyl_dimension(rs, lam):
        raise ArithmeticError("character total disagrees with the Weyl dimension")
    return ct


def branch(s: BranchingSetup, lam: Weight) -> dict[Vec, int]:
    """Decomposition of the restriction of the irreducible with highest
    weight lam: map (subgroup dominant weight + central charges) -> mult.

    Restrict all weights, then repeatedly take a maximal surviving weight
    (dominance order within each central class), which is necessarily a
    highest weight, and subtract the full subgroup character.
    """
    _check_rank(s.group)
    _check_rank(s.subgroup)
    h = s.subgroup
    hr = h.rank
    table: dict[Vec, int] = {}
    for w, m in freudenthal(s.group, lam).entries:
        key = s.restrict(w)
        table[key] = table.get(key, 0) + m

    def height(v: Vec) -> Fraction:
        return sum(mat_vec(h.inv_cartan, v[:hr]), ZERO)

    result: dict[Vec, int] = {}
    guard = sum(m for m in table.values())
    while table:
        guard -= 1
        if guard < 0:
            raise ArithmeticError("branching loop failed to terminate")
        top = max(table, key=lambda v: (height(v), v))
        if any(x < 0 or x.denominator != 1 for x in top[:hr]):
            raise ValueError(
                f"maximal surviving weight {top} is not subgroup-dominant: "
                "invalid torus map"
            )
        mult = table[top]
        if mult < 0:
            raise ValueError("negative multiplicity: invalid torus map")
        hw = Weight(top[:hr], "fund")
        central = top[hr:]
        result[top] = result.get(top, 0) + mult
        for w, m in freudenthal(h, hw).entries:
            key = w + central
            left = table.get(key, 0) - mult * m
            if left < 0:
                raise ValueError("negative multiplicity: invalid torus map")
            if left == 0:
                table.pop(key, None)
            else:
                table[key] = left
    return result


def well_membership_oracle(s: BranchingSetup, lam: Weight, chi_codomain: Vec) -> int:
    """Multiplicity of the subgroup type chi in the restriction of lam."""
    return branch(s, lam).get(vec(chi_codomain), 0)


@dataclass(frozen=True)
class CrosscheckReport:
    checked: int
    mismatches: tuple[tuple[Vec, str], ...]
    high_multiplicity: tuple[tuple[Vec, int], ...]
    dualized: bool

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.high_multiplicity


def _dominant_weights_up_to(rs: RootSystem, bound: int) -> list[Vec]:
    n = rs.rank

    def rec(i: int, left: int, cur: list[int]):
        if i == n:
            yield tuple(Fraction(x) for x in cur)
            return
        for a in range(left + 1):
            yield from rec(i + 1, left - a, cur + [a])

    return list(rec(0, bound, []))


def crosscheck(
    s: BranchingSetup,
    table: GeneratorTable,
    chi: Vec,
    bound: int,
) -> CrosscheckReport:
    """Compare monoid membership against branching multiplicities for every
    dominant weight with coordinate sum at most the bound.

    The query character must extend to the parabolic: when it does not lie
    in the span of the table's characters but its dual does, the comparison
    is performed on the dual pair (contragredient weights on both sides),
    which has the same multiplicities.
    """
    chi = vec(chi)
    from .linalg import rank as _rank

    chi_rows = [table.chi(cid) for cid in table.ids()]
    in_span = _rank(chi_rows) == _rank(chi_rows + [chi])
    dualized = False
    chi_query = chi
    if not in_span:
        cod = s.chi_to_codomain(chi)
        hpart = Weight(cod[: s.subgroup.rank], "fund")
        dual_cod = s.subgroup.minus_w0(hpart).coords + tuple(-x for x in cod[s.subgroup.rank :])
        back = s.chi_from_codomain(dual_cod)
        if back is None or _rank(chi_rows) != _rank(chi_rows + [back]):
            raise ValueError(
                "character neither extends to the parabolic nor dualizes into it"
            )
        chi_query = back
        dualized = True

    chi_cod = s.chi_to_codomain(chi)
    mismatches = []
    high = []
    for lam in _dominant_weights_up_to(s.group, bound):
        lam_w = Weight(lam, "fund")
        mult = well_membership_oracle(s, lam_w, chi_cod)
        if mult >= 2:
            high.append((lam, mult))
        lam_query = lam
        if dualized:
            lam_query = s.group.minus_w0(lam_w).coords
        got = membership(table, (lam_query, tuple(-x for x in chi_query))) is not None
        if got != (mult >= 1):
            mismatches.append((lam, f"monoid={'in' if got else 'out'} oracle={mult}"))
    return CrosscheckReport(
        checked=len(_dominant_weights_up_to(s.group, bound)),
        mismatches=tuple(mismatches),
        high_multiplicity=tuple(high),
        dualized=dualized,
    )

"""Free generators (omega_D, chi_D) of the extended weight monoid.

The computation fixes a minimal parabolic subset of colors.  Colors outside
it are "boundary" colors: each is moved by a single simple root alpha and
contributes the known pair (omega_alpha, -omega_alpha restricted to the
chosen character basis).  The spherical-root relations

    (sigma, 0) = sum_D c(D, sigma) (omega_D, chi_D)

then determine the remaining characters by an exact linear solve; the
coefficient matrix over the unknown colors must have full column rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import Vec, is_integral, mat_vec, rank, rref, vec, zeros
from .rootlat import Weight
from .sphdata import SphericalDatum

ZERO = Fraction(0)


@dataclass(frozen=True)
class PCharSpace:
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("character basis labels must be unique")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def show(self, v: Vec) -> str:
        terms = []
        for c, name in zip(v, self.labels):
            if c == 0:
                continue
            if c == 1:
                terms.append(f"+{name}")
            elif c == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{'+' if c > 0 else '-'}{abs(c)}*{name}")
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s

    def parse(self, expr: str) -> Vec:
        """Parse '3*w1 - w2 + 0' style expressions over the basis labels."""
        out = [ZERO] * self.dim
        s = expr.replace(" ", "")
        if not s:
            raise ValueError("empty character expression")
        s = s.replace("-", "+-")
        for term in s.split("+"):
            if term in ("", "-"):
                continue
            if term in ("0", "-0"):
                continue
            neg = term.startswith("-")
            if neg:
                term = term[1:]
            if "*" in term:
                co, name = term.split("*", 1)
                coeff = Fraction(co)
            elif term in self.labels:
                coeff, name = Fraction(1), term
            else:
                # bare rational such as "0" handled above; anything else is a label
                raise ValueError(f"unknown character term {term!r}")
            if name not in self.labels:
                raise ValueError(f"unknown character label {name!r}")
            out[self.labels.index(name)] += -coeff if neg else coeff
        return tuple(out)


@dataclass(frozen=True)
class RestrictionContext:
    space: PCharSpace
    restrict: tuple[Vec, ...]            # space.dim rows, ambient-rank columns
    boundary_root_of: dict[str, int]     # boundary color id -> moving root index

    def __post_init__(self):
        object.__setattr__(self, "restrict", tuple(vec(r) for r in self.restrict))
        if len(self.restrict) != self.space.dim:
            raise ValueError("restriction matrix must have one row per basis label")
        if len(self.restrict) != rank(self.restrict):
            raise ValueError("restriction matrix must have full row rank")

    def restrict_fund(self, fund: Vec) -> Vec:
        return mat_vec(self.restrict, fund)


@dataclass(frozen=True)
class GeneratorTable:
    space: PCharSpace
    entries: tuple[tuple[str, Vec, Vec], ...]   # (color id, omega fund coords, chi)

    def ids(self) -> list[str]:
        return [cid for cid, _, _ in self.entries]

    def omega(self, cid: str) -> Vec:
        for i, o, _ in self.entries:
            if i == cid:
                return o
        raise KeyError(cid)

    def chi(self, cid: str) -> Vec:
        for i, _, c in self.entries:
            if i == cid:
                return c
        raise KeyError(cid)

    def stacked(self) -> list[Vec]:
        """Column per color: omega coordinates over chi coordinates."""
        return [o + c for _, o, c in self.entries]

    def as_set(self) -> set[tuple[Vec, Vec]]:
        return {(o, c) for _, o, c in self.entries}


def omega_of_color(d: SphericalDatum, cid: str) -> Weight:
    """B-weight of a color: eps * sum of fundamental weights over its moving
    roots, with eps = 2 exactly when some moving root alpha has 2*alpha among
    the spherical roots."""
    c = d.color(cid)
    rk = d.ambient.rank
    sig = d.sigma_root_coords()
    eps = 1
    for a in c.moved_by:
        doubled = tuple(Fraction(2) if k == a - 1 else ZERO for k in range(rk))
        if any(s == doubled for s in sig):
            eps = 2
    coords = [ZERO] * rk
    for a in c.moved_by:
        coords[a - 1] += Fraction(eps)
    return Weight(tuple(coords), "fund")


class SolveError(ValueError):
    pass


def _boundary(d: SphericalDatum, subset) -> list[str]:
    inside = set(subset)
    return [cid for cid in d.color_ids() if cid not in inside]


def boundary_chi(d: SphericalDatum, subset, ctx: RestrictionContext) -> dict[str, Vec]:
    """Known characters of the colors pulled back from G/Q."""
    out: dict[str, Vec] = {}
    for cid in _boundary(d, subset):
        c = d.color(cid)
        if cid not in ctx.boundary_root_of:
            raise SolveError(f"boundary color {cid} has no declared moving root")
        a = ctx.boundary_root_of[cid]
        if len(c.moved_by) != 1 or a not in c.moved_by:
            raise SolveError(
                f"boundary color {cid} must be moved exactly by its declared root"
            )
        omega = omega_of_color(d, cid)
        expected = d.ambient.fund_weight(a)
        if omega.coords != expected.coords:
            raise SolveError(
                f"boundary color {cid}: weight {omega.coords} is not the fundamental "
                f"weight of its moving root (doubled spherical root?)"
            )
        out[cid] = tuple(-x for x in ctx.restrict_fund(expected.coords))
    return out


def solve_generators(d: SphericalDatum, subset, ctx: RestrictionContext) -> GeneratorTable:
    """Solve the spherical-root relations for the characters of the subset.

    Raises SolveError on rank deficiency, on a failed first-component
    identity, or on an inconsistent system (naming the offending root).
    """
    subset = [cid for cid in d.color_ids() if cid in set(subset)]
    known = boundary_chi(d, subset, ctx)
    omegas = {cid: omega_of_color(d, cid).coords for cid in d.color_ids()}

    # first-component identity: sigma = sum_D c(D, sigma) omega_D, exactly
    sig_fund = d.sigma_fund_coords()
    for k in range(len(d.sigma)):
        total = zeros(d.ambient.rank)
        for c in d.colors:
            total = tuple(t + c.pairing[k] * o for t, o in zip(total, omegas[c.id]))
        if total != sig_fund[k]:
            raise SolveError(
                f"first-component identity fails on sigma[{k}]: "
                f"{total} != {sig_fund[k]}"
            )

    a_rows = [tuple(d.color(cid).pairing[k] for cid in subset) for k in range(len(d.sigma))]
    if rank(a_rows) != len(subset):
        raise SolveError(
            f"coefficient matrix has rank {rank(a_rows)} < {len(subset)} unknowns; "
            f"the subset does not determine the characters"
        )

    dim = ctx.space.dim
    rhs = []
    for k in range(len(d.sigma)):
        r = zeros(dim)
        for cid, chi in known.items():
            coeff = d.color(cid).pairing[k]
            r = tuple(x - coeff * y for x, y in zip(r, chi))
        rhs.append(r)

    aug = [a_rows[k] + rhs[k] for k in range(len(d.sigma))]
    red, pivots = rref(aug)
    ncols = len(subset)
    sol: dict[str, Vec] = {}
    for i, c in enumerate(pivots):
        if c >= ncols:
            break
        sol[subset[c]] = tuple(red[i][ncols:])
    # consistency of the over-determined system, reported per spherical root
    for k in range(len(d.sigma)):
        lhs = zeros(dim)
        for j, cid in enumerate(subset):
            lhs = tuple(x + a_rows[k][j] * y for x, y in zip(lhs, sol[cid]))
        if lhs != rhs[k]:
            raise SolveError(f"inconsistent relations at sigma[{k}]")

    entries = []
    for cid in d.color_ids():
        chi = known.get(cid, sol.get(cid))
        entries.append((cid, omegas[cid], chi))
    table = GeneratorTable(ctx.space, tuple(entries))

    _verify_table(d, table)
    return table


def _verify_table(d: SphericalDatum, t: GeneratorTable) -> None:
    """Zero residual on every spherical-root relation, and independence."""
    sig_fund = d.sigma_fund_coords()
    dim = t.space.dim
    for k in range(len(d.sigma)):
        acc_o = zeros(d.ambient.rank)
        acc_c = zeros(dim)
        for cid, o, c in t.entries:
            coeff = d.color(cid).pairing[k]
            acc_o = tuple(x + coeff * y for x, y in zip(acc_o, o))
            acc_c = tuple(x + coeff * y for x, y in zip(acc_c, c))
        if acc_o != sig_fund[k] or any(x != 0 for x in acc_c):
            raise SolveError(f"residual check fails on sigma[{k}]")
    if rank(t.stacked()) != len(t.entries):
        raise SolveError("generator pairs are not linearly independent")


def membership(t: GeneratorTable, target: tuple[Vec, Vec]) -> Optional[dict[str, Fraction]]:
    """Coefficients writing (lambda, chi) over the generators, or None.

    The generators are linearly independent, so the rational solution is
    unique; membership additionally demands non-negative integers.
    """
    lam, chi = vec(target[0]), vec(target[1])
    cols = t.stacked()
    rows = list(zip(*cols))
    sol = _solve_columns(rows, lam + chi)
    if sol is None:
        return None
    if not is_integral(sol) or any(x < 0 for x in sol):
        return None
    return {cid: x for cid, x in zip(t.ids(), sol)}


def _solve_columns(rows, b) -> Optional[Vec]:
    from .linalg import solve_unique

    try:
        return solve_unique(rows, b)
    except ValueError:
        raise SolveError("generator table is rank deficient") from None


def coefficients(t: GeneratorTable, target: tuple[Vec, Vec]) -> Optional[dict[str, Fraction]]:
    """Exact rational coefficients over the generators (no sign or
    integrality requirement), or None when the target is outside the span."""
    lam, chi = vec(target[0]), vec(target[1])
    rows = list(zip(*t.stacked()))
    sol = _solve_columns(rows, lam + chi)
    if sol is None:
        return None
    return {cid: x for cid, x in zip(t.ids(), sol)}


def synthesize(t: GeneratorTable, coeffs: dict[str, Fraction]) -> tuple[Vec, Vec]:
    """Sum of generators with the given coefficients, as (omega, chi)."""
    rk = len(t.entries[0][1])
    dim = t.space.dim
    o = zeros(rk)
    c = zeros(dim)
    for cid, a in coeffs.items():
        o = tuple(x + a * y for x, y in zip(o, t.omega(cid)))
        c = tuple(x + a * y for x, y in zip(c, t.chi(cid)))
    return o, c


@dataclass(frozen=True)
class RankReport:
    chars_identity: Optional[bool]     # rk X(P) = |Delta| - rk Xi
    kernel_identity: Optional[bool]    # rk Xi - dim span rho(Delta') = |boundary| - rk X(P)
    details: str


def rank_identities(
    t: GeneratorTable, d: SphericalDatum, rk_xp: int, subset
) -> RankReport:
    n_colors = len(d.colors)
    xi = d.xi_rank()
    first = rk_xp == n_colors - xi
    boundary = _boundary(d, subset)
    if not boundary:
        return RankReport(first, None, "no boundary colors: kernel identity not applicable")
    a_rows = [tuple(d.color(cid).pairing[k] for cid in set(subset)) for k in range(len(d.sigma))]
    span = rank(a_rows)
    second = xi - span == len(boundary) - rk_xp
    detail = (
        f"rk X(P)={rk_xp}, |Delta|={n_colors}, rk Xi={xi}, "
        f"dim span rho(Delta')={span}, |boundary|={len(boundary)}"
    )
    return RankReport(first, second, detail)

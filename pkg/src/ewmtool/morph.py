"""Distinguished/parabolic color subsets and morphism checkers.

Subset verdicts follow the conventions of :mod:`ewmtool.cones`: distinguished
means a combination with strictly positive coefficients that is non-negative
on every spherical root, parabolic means a non-negative combination that is
strictly positive on every spherical root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .cones import GE, GT, FeasibilityProblem, cone_subspace_intersection, feasible, in_nonneg_span
from .linalg import ONE, Vec, content, dot, primitive_integer, rank, solve_unique, vec
from .rootlat import Weight
from .sphdata import SphericalDatum

ZERO = Fraction(0)


@dataclass(frozen=True)
class SubsetVerdict:
    subset: frozenset[str]
    distinguished: bool
    parabolic: bool
    witness: Optional[dict[str, Fraction]]


def _std_tests(nsigma: int, rel: str) -> tuple[tuple[Vec, str], ...]:
    return tuple(
        (tuple(ONE if k == j else ZERO for k in range(nsigma)), rel)
        for j in range(nsigma)
    )


def classify_subset(d: SphericalDatum, subset) -> SubsetVerdict:
    ids = [cid for cid in d.color_ids() if cid in set(subset)]
    unknown = set(subset) - set(d.color_ids())
    if unknown:
        raise KeyError(f"unknown color ids {sorted(unknown)}")
    gens = tuple(d.color(cid).pairing for cid in ids)
    n = len(d.sigma)
    dist, wd = feasible(FeasibilityProblem(gens, _std_tests(n, GE), "strictly-positive"))
    par, wp = feasible(FeasibilityProblem(gens, _std_tests(n, GT), "nonneg"))
    witness = None
    w = wp if par else (wd if dist else None)
    if w is not None:
        witness = dict(zip(ids, w))
    return SubsetVerdict(frozenset(ids), dist, par, witness)


def is_parabolic(d: SphericalDatum, subset) -> bool:
    return classify_subset(d, subset).parabolic


def mandatory_colors(d: SphericalDatum) -> frozenset[str]:
    """Colors moved by two or more simple roots.

    On a (partial) flag variety every color is moved by exactly one simple
    root, so these colors cannot survive into the boundary of a morphism to
    G/Q and must belong to the corresponding parabolic subset.
    """
    return frozenset(c.id for c in d.colors if len(c.moved_by) >= 2)


def minimal_parabolic_subsets(d: SphericalDatum, flag_filter: bool = True) -> list[frozenset[str]]:
    """All inclusion-minimal parabolic subsets of colors.

    Parabolicity is monotone under inclusion, so a parabolic subset is
    minimal iff dropping any single color breaks it.  With ``flag_filter``
    the search is restricted to subsets containing every mandatory color.
    """
    ids = d.color_ids()
    must = mandatory_colors(d) if flag_filter else frozenset()
    pool = [cid for cid in ids if cid not in must]
    found: list[frozenset[str]] = []
    for k in range(len(pool) + 1):
        for extra in combinations(pool, k):
            cand = must | frozenset(extra)
            if any(f <= cand for f in found):
                continue
            if is_parabolic(d, cand):
                if all(not is_parabolic(d, cand - {x}) for x in cand):
                    found.append(cand)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def quotient_spherical_roots(d: SphericalDatum, subset) -> list[Weight]:
    """Extreme rays of cone(Sigma) cut by the kernels of rho over the subset,
    rescaled primitive in the lattice Xi of the datum.

    The subset must be distinguished (the adopted convention for quotient
    maps); the rays come back in ambient root-basis coordinates.
    """
    verdict = classify_subset(d, subset)
    if not verdict.distinguished:
        raise ValueError(f"subset {sorted(subset)} is not distinguished")
    nsigma = len(d.sigma)
    unit_rays = [tuple(ONE if k == j else ZERO for k in range(nsigma)) for j in range(nsigma)]
    kernels = [d.color(cid).pairing for cid in sorted(set(subset))]
    rays = cone_subspace_intersection(unit_rays, kernels)
    sig = d.sigma_root_coords()
    out = []
    for r in rays:
        amb = tuple(
            sum((r[k] * sig[k][j] for k in range(nsigma)), ZERO)
            for j in range(d.ambient.rank)
        )
        out.append(Weight(_primitive_in_lattice(d, amb), "root"))
    out.sort(key=lambda w: w.coords)
    return out


def _primitive_in_lattice(d: SphericalDatum, v: Vec) -> Vec:
    """Rescale v to the generator of (Q v) intersected with Xi."""
    basis = d.lattice_basis_root_coords()
    cols = list(zip(*basis))
    coords = solve_unique(cols, vec(v))
    if coords is None:
        raise ValueError("ray does not lie in the span of Xi")
    c = content(coords)
    return tuple(x / c for x in v)


def check_morphism_data(
    d_x: SphericalDatum,
    subset,
    d_y: SphericalDatum,
    psi: dict[str, str],
) -> bool:
    """Combinatorial sufficient condition for a morphism G/K -> G/J.

    Verifies, over the same ambient root system: the subset is distinguished;
    the spherical roots of Y span its lattice; the quotient cone equality
    holds; and psi matches colors of Y with the leftover colors of X
    compatibly with both the pairing (restricted to the span of Sigma(Y)) and
    the moving simple roots.  A True verdict certifies only the combinatorial
    hypotheses; it says nothing about connectedness of the subgroup upstairs.
    """
    if d_x.ambient != d_y.ambient:
        raise ValueError("morphism data must share the ambient root system")
    subset = frozenset(subset)
    leftover = set(d_x.color_ids()) - subset
    if set(psi.keys()) != set(d_y.color_ids()) or set(psi.values()) != leftover:
        raise ValueError("psi is not a bijection from Delta(Y) onto the leftover colors")

    if not classify_subset(d_x, subset).distinguished:
        return False
    # (a) Sigma(Y) spans Xi(Y) rationally
    if rank(d_y.sigma_root_coords()) != d_y.xi_rank():
        return False
    # (b) cone equality, both inclusions on extreme rays
    quot = [w.coords for w in quotient_spherical_roots(d_x, subset)]
    sig_y = d_y.sigma_root_coords()
    if not all(in_nonneg_span(s, quot) for s in sig_y):
        return False
    if not all(in_nonneg_span(r, sig_y) for r in quot):
        return False
    # (c) pairing restriction and moving-root compatibility, color by color
    sig_x = d_x.sigma_root_coords()
    cols = list(zip(*sig_x))
    for ey, ex in psi.items():
        cy = d_y.color(ey)
        cx = d_x.color(ex)
        if cy.moved_by != cx.moved_by:
            return False
        for k, s in enumerate(sig_y):
            coords = solve_unique(cols, s)
            if coords is None:
                return False
            val = sum((a * b for a, b in zip(cx.pairing, coords)), ZERO)
            if val != cy.pairing[k]:
                return False
    return True


def check_parabolic_in_H(d_x: SphericalDatum, d_y: SphericalDatum) -> bool:
    """Sufficient condition for the smaller subgroup to be parabolic in the
    larger: both data of full spherical rank, and no proper subcone of
    Sigma(X) containing all of Sigma(Y).

    False means the criterion is inconclusive, not a refutation.
    """
    if len(d_x.sigma) != d_x.xi_rank():
        return False
    if len(d_y.sigma) != d_y.xi_rank():
        return False
    sig_x = d_x.sigma_root_coords()
    sig_y = d_y.sigma_root_coords()
    # It suffices to test the maximal proper subsets.
    for drop in range(len(sig_x)):
        sub = [s for k, s in enumerate(sig_x) if k != drop]
        if all(in_nonneg_span(s, sub) for s in sig_y):
            return False
    return True

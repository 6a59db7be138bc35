"""Homogeneous spherical data: colors, spherical roots, lattice, pairing.

A datum is immutable after construction.  ``validate`` returns violations as
strings rather than raising, so a loader can report all problems at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import Vec, is_integral, rank, solve_unique, vec
from .rootlat import RootSystem, Weight

ZERO = Fraction(0)


@dataclass(frozen=True)
class Color:
    id: str
    moved_by: frozenset[int]            # 1-based global simple-root indices
    pairing: Vec                        # c(D, sigma) indexed like datum.sigma
    rho: Optional[Vec] = None           # optional functional on the Xi basis

    def __post_init__(self):
        object.__setattr__(self, "moved_by", frozenset(int(i) for i in self.moved_by))
        object.__setattr__(self, "pairing", vec(self.pairing))
        if self.rho is not None:
            object.__setattr__(self, "rho", vec(self.rho))


@dataclass(frozen=True)
class SphericalDatum:
    ambient: RootSystem
    sp: frozenset[int]                  # S^p, 1-based indices
    sigma: tuple[Weight, ...]           # spherical roots, root basis
    colors: tuple[Color, ...]
    xi_basis: Optional[tuple[Weight, ...]] = None   # defaults to Z-span of sigma
    wonderful: bool = False
    simply_connected: bool = True

    def __post_init__(self):
        object.__setattr__(self, "sp", frozenset(int(i) for i in self.sp))
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.xi_basis is not None:
            object.__setattr__(self, "xi_basis", tuple(self.xi_basis))

    # -- derived views --------------------------------------------------------

    def sigma_root_coords(self) -> list[Vec]:
        return [self.ambient.to_root(s) for s in self.sigma]

    def sigma_fund_coords(self) -> list[Vec]:
        return [self.ambient.to_fund(s) for s in self.sigma]

    def lattice_basis_root_coords(self) -> list[Vec]:
        if self.xi_basis is not None:
            return [self.ambient.to_root(w) for w in self.xi_basis]
        return self.sigma_root_coords()

    def xi_rank(self) -> int:
        return rank(self.lattice_basis_root_coords())

    def color(self, cid: str) -> Color:
        for c in self.colors:
            if c.id == cid:
                return c
        raise KeyError(f"unknown color id {cid!r}")

    def color_ids(self) -> list[str]:
        return [c.id for c in self.colors]

    def simple_spherical_roots(self) -> set[int]:
        """Indices i with alpha_i in Sigma (the roots moving two colors)."""
        out = set()
        for i in range(1, self.ambient.rank + 1):
            e = tuple(Fraction(1) if k == i - 1 else ZERO for k in range(self.ambient.rank))
            if any(self.ambient.to_root(s) == e for s in self.sigma):
                out.add(i)
        return out


def colors_moved_by(d: SphericalDatum, alpha: int) -> set[str]:
    if not 1 <= alpha <= d.ambient.rank:
        raise IndexError(f"simple-root index {alpha} out of range")
    return {c.id for c in d.colors if alpha in c.moved_by}


def cartan_pairing(d: SphericalDatum, cid: str, sigma_index: int) -> Fraction:
    c = d.color(cid)
    if not 0 <= sigma_index < len(d.sigma):
        raise IndexError(f"sigma index {sigma_index} out of range")
    return c.pairing[sigma_index]


def _lattice_coords(d: SphericalDatum, v: Vec) -> Optional[Vec]:
    """Coordinates of a root-basis vector in the Xi basis, if it lies in the span."""
    basis = d.lattice_basis_root_coords()
    cols = list(zip(*basis)) if basis else []
    if not cols:
        return None
    return solve_unique(cols, v)


def validate(d: SphericalDatum) -> list[str]:
    """Check the color-moving rules, primitivity and the declared flags."""
    issues: list[str] = []
    names = d.ambient.root_names()

    for c in d.colors:
        if not c.moved_by:
            issues.append(f"color {c.id} is moved by no simple root")
        if len(c.pairing) != len(d.sigma):
            issues.append(f"color {c.id} pairing row has wrong length")
        if c.rho is not None:
            basis = d.lattice_basis_root_coords()
            for k, s in enumerate(d.sigma_root_coords()):
                coords = _lattice_coords(d, s)
                if coords is None:
                    continue
                val = sum((a * b for a, b in zip(c.rho, coords)), ZERO)
                if val != c.pairing[k]:
                    issues.append(
                        f"color {c.id}: rho disagrees with pairing on sigma[{k}]"
                    )

    simple_sigma = d.simple_spherical_roots()
    for i in range(1, d.ambient.rank + 1):
        moved = colors_moved_by(d, i)
        if i in d.sp:
            if moved:
                issues.append(f"{names[i-1]} in S^p moves {sorted(moved)}")
            continue
        want = 2 if i in simple_sigma else 1
        if len(moved) != want:
            kind = "in S&Sigma" if i in simple_sigma else "not in S^p"
            issues.append(f"{names[i-1]} {kind} moves {len(moved)} colors")

    for k, s in enumerate(d.sigma_root_coords()):
        coords = _lattice_coords(d, s)
        if coords is None:
            issues.append(f"sigma[{k}] is not in the span of the Xi basis")
            continue
        if not is_integral(coords):
            issues.append(f"sigma[{k}] is not in the lattice Xi")
            continue
        from math import gcd

        g = 0
        for x in coords:
            g = gcd(g, abs(x.numerator))
        if g != 1:
            issues.append(f"sigma[{k}] not primitive in Xi (content {g})")

    if d.wonderful:
        if d.xi_basis is None:
            pass  # Xi = Z Sigma, a basis of itself
        else:
            if len(d.sigma) != len(d.xi_basis):
                issues.append("wonderful flag: |Sigma| != |Xi basis|")
            else:
                rows = [_lattice_coords(d, s) for s in d.sigma_root_coords()]
                if any(r is None for r in rows):
                    issues.append("wonderful flag: Sigma not inside Xi span")
                else:
                    det = _det([list(r) for r in rows])
                    if det not in (1, -1):
                        issues.append(f"wonderful flag: Sigma-to-Xi determinant {det} != +-1")
        if len(d.sigma) != rank(d.sigma_root_coords()):
            issues.append("wonderful flag: spherical roots not linearly independent")

    if not d.simply_connected:
        for k, s in enumerate(d.sigma_root_coords()):
            for i in range(d.ambient.rank):
                e2 = tuple(Fraction(2) if j == i else ZERO for j in range(d.ambient.rank))
                if s == e2:
                    issues.append(
                        f"adjusted ambient group but sigma[{k}] = 2*{names[i]}"
                    )
    return issues


def _det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    det = Fraction(1)
    a = [r[:] for r in rows]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                for j in range(c, n):
                    a[i][j] -= f * a[c][j]
    return det

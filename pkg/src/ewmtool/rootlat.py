"""Root systems and weight lattices for products of irreducible types A-G.

Simple roots carry Bourbaki numbering inside each factor and a single flat
1-based global index across factors.  All pairings, basis conversions and
dimension counts are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import re

from .linalg import ONE, ZERO, Vec, dot, frac, mat_vec, rref, vec

_VALID = {"A": 1, "B": 1, "C": 1, "D": 3, "E": 6, "F": 4, "G": 2}


def _cartan_block(letter: str, n: int) -> list[list[int]]:
    """Bourbaki Cartan matrix of one irreducible factor, C[i][j] = <a_j, a_i^vee>."""
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        c[i][j] = cij
        c[j][i] = cji

    if letter in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if letter == "B" and n >= 2:
            # a_n short: <a_n, a_{n-1}^vee> = -1, <a_{n-1}, a_n^vee> = -2
            link(n - 2, n - 1, -1, -2)
        if letter == "C" and n >= 2:
            link(n - 2, n - 1, -2, -1)
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        # chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -1, -2)  # a3, a4 short
        link(2, 3)
    elif letter == "G":
        link(0, 1, -3, -1)  # a1 short, a2 long
    return c


def _root_halfnorms(letter: str, n: int) -> list[Fraction]:
    """d_i = (a_i, a_i)/2 for a Weyl-invariant form with long roots of norm 2."""
    d = [ONE] * n
    if letter == "B":
        d[n - 1] = Fraction(1, 2)
    elif letter == "C":
        for i in range(n - 1):
            d[i] = Fraction(1, 2)
    elif letter == "F":
        d[2] = d[3] = Fraction(1, 2)
    elif letter == "G":
        d[0] = Fraction(1, 3)
    return d


def _minus_w0_perm(letter: str, n: int) -> list[int]:
    """The involution -w0 as a permutation of simple-root indices (0-based)."""
    p = list(range(n))
    if letter == "A":
        p = list(reversed(p))
    elif letter == "D" and n % 2 == 1:
        p[n - 2], p[n - 1] = p[n - 1], p[n - 2]
    elif letter == "E" and n == 6:
        p = [5, 1, 4, 3, 2, 0]
    return p


@dataclass(frozen=True)
class Weight:
    """A vector in the weight space, tagged with its coordinate basis."""

    coords: Vec
    basis: str  # "fund" or "root"

    def __post_init__(self):
        if self.basis not in ("fund", "root"):
            raise ValueError(f"unknown basis tag {self.basis!r}")
        object.__setattr__(self, "coords", vec(self.coords))


@dataclass(frozen=True)
class RootSystem:
    factors: tuple[tuple[str, int], ...]
    cartan: tuple[Vec, ...]            # C[i][j] = <a_j, a_i^vee>
    inv_cartan: tuple[Vec, ...]
    halfnorms: Vec                     # (a_i, a_i)/2

    @property
    def rank(self) -> int:
        return len(self.halfnorms)

    def spec_string(self) -> str:
        return "x".join(f"{t}{n}" for t, n in self.factors)

    def root_names(self) -> list[str]:
        """Display names a1..an, a1'.., matching primed factor conventions."""
        names = []
        for k, (_, n) in enumerate(self.factors):
            names += [f"a{i + 1}" + "'" * k for i in range(n)]
        return names

    # -- basis conversions ---------------------------------------------------

    def to_fund(self, w: Weight) -> Vec:
        if w.basis == "fund":
            return w.coords
        return mat_vec(self.cartan, w.coords)

    def to_root(self, w: Weight) -> Vec:
        if w.basis == "root":
            return w.coords
        return mat_vec(self.inv_cartan, w.coords)

    def fund_weight(self, i: int) -> Weight:
        """Fundamental weight for the 1-based global simple-root index i."""
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple-root index {i} out of range")
        return Weight(tuple(ONE if k == i - 1 else ZERO for k in range(self.rank)), "fund")

    def simple_root(self, i: int) -> Weight:
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple-root index {i} out of range")
        return Weight(tuple(ONE if k == i - 1 else ZERO for k in range(self.rank)), "root")

    def form(self, a: Weight, b: Weight) -> Fraction:
        """Weyl-invariant symmetric form (long roots of norm 2 per factor)."""
        x = self.to_root(a)
        yf = self.to_fund(b)
        # (a, b) = sum_i x_i (alpha_i, b) = sum_i x_i d_i <b, alpha_i^vee>
        return sum((xi * di * yi for xi, di, yi in zip(x, self.halfnorms, yf)), ZERO)

    def minus_w0(self, w: Weight) -> Weight:
        """Image of a weight under -w0 (highest weight of the dual)."""
        f = self.to_fund(w)
        out = list(f)
        off = 0
        for letter, n in self.factors:
            p = _minus_w0_perm(letter, n)
            for i in range(n):
                out[off + i] = f[off + p[i]]
            off += n
        return Weight(tuple(out), "fund")


def build_root_system(spec) -> RootSystem:
    """Build a root system from [("A", 3)]-style factor lists or "A3xC2" strings.

    Ranks B1 and C1 are accepted as aliases of A1 so product specs like
    "C2xC1" parse; D needs rank >= 3 and E one of 6, 7, 8.
    """
    if isinstance(spec, str):
        parts = spec.split("x")
        factors = []
        for p in parts:
            m = re.fullmatch(r"([A-Ga-g])(\d+)", p.strip())
            if not m:
                raise ValueError(f"bad root-system spec {p!r}")
            factors.append((m.group(1).upper(), int(m.group(2))))
    else:
        factors = [(str(t).upper(), int(n)) for t, n in spec]

    blocks = []
    norm_factors: list[tuple[str, int]] = []
    for letter, n in factors:
        if letter not in _VALID:
            raise ValueError(f"unknown Dynkin type {letter!r}")
        if letter in ("B", "C") and n == 1:
            letter = "A"
        if letter == "E" and n not in (6, 7, 8):
            raise ValueError("type E has rank 6, 7 or 8")
        if letter == "F" and n != 4:
            raise ValueError("type F has rank 4")
        if letter == "G" and n != 2:
            raise ValueError("type G has rank 2")
        if n < _VALID[letter] or n < 1:
            raise ValueError(f"rank {n} invalid for type {letter}")
        blocks.append((letter, n))
        norm_factors.append((letter, n))

    total = sum(n for _, n in blocks)
    cart = [[ZERO] * total for _ in range(total)]
    half: list[Fraction] = []
    off = 0
    for letter, n in blocks:
        cb = _cartan_block(letter, n)
        for i in range(n):
            for j in range(n):
                cart[off + i][off + j] = Fraction(cb[i][j])
        half += _root_halfnorms(letter, n)
        off += n

    cartan = tuple(tuple(row) for row in cart)
    inv = _invert(cartan)
    return RootSystem(tuple(norm_factors), cartan, inv, tuple(half))


def _invert(m: tuple[Vec, ...]) -> tuple[Vec, ...]:
    n = len(m)
    aug = [list(m[i]) + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    red, piv = rref(aug)
    if piv != list(range(n)):
        raise ValueError("singular matrix")
    return tuple(tuple(red[i][n:]) for i in range(n))


def pair(rs: RootSystem, w: Weight, i: int) -> Fraction:
    """Exact pairing <w, a_i^vee> for the 1-based global index i."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple-root index {i} out of range")
    return rs.to_fund(w)[i - 1]


def is_dominant(rs: RootSystem, w: Weight) -> bool:
    return all(x >= 0 for x in rs.to_fund(w))


def is_dominant_integral(rs: RootSystem, w: Weight) -> bool:
    f = rs.to_fund(w)
    return all(x >= 0 and x.denominator == 1 for x in f)


def dominance_leq(rs: RootSystem, lam: Weight, mu: Weight) -> bool:
    """True iff mu - lam is a non-negative integer combination of simple roots."""
    diff = tuple(a - b for a, b in zip(rs.to_root(mu), rs.to_root(lam)))
    return all(x >= 0 and x.denominator == 1 for x in diff)


@lru_cache(maxsize=None)
def _all_roots_fund(cartan: tuple[Vec, ...]) -> frozenset[Vec]:
    """All roots, in fundamental coordinates, as the Weyl orbit of the simple
    roots under simple reflections (breadth-first closure)."""
    n = len(cartan)
    simple = [tuple(cartan[i][j] for i in range(n)) for j in range(n)]

    def reflect(v: Vec, i: int) -> Vec:
        coeff = v[i]
        return tuple(x - coeff * s for x, s in zip(v, simple[i]))

    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                w = reflect(v, i)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def positive_roots(rs: RootSystem) -> list[Weight]:
    """Positive roots in root-basis coordinates (all coefficients >= 0)."""
    out = []
    for v in _all_roots_fund(rs.cartan):
        r = mat_vec(rs.inv_cartan, v)
        if all(x >= 0 for x in r):
            out.append(Weight(r, "root"))
    out.sort(key=lambda w: (sum(w.coords), w.coords))
    return out


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible of highest weight lam (Weyl's formula)."""
    if not is_dominant_integral(rs, lam):
        raise ValueError("weight is not dominant integral")
    rho = Weight((ONE,) * rs.rank, "fund")
    lam_rho = Weight(tuple(a + 1 for a in rs.to_fund(lam)), "fund")
    num = ONE
    den = ONE
    for alpha in positive_roots(rs):
        num *= rs.form(lam_rho, alpha)
        den *= rs.form(rho, alpha)
    d = num / den
    if d.denominator != 1:
        raise ArithmeticError("Weyl dimension did not come out integral")
    return int(d)

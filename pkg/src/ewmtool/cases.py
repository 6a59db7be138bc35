"""Bundled case corpus: JSON schema, loader, and the regression harness.

Two kinds of files share the directory: full ``datum`` cases carrying a
spherical datum plus the data needed to recompute its generator table, and
``table`` fixtures carrying a ready-made generator table used only by the
well machinery.  Exact rationals are written as strings like "1/2"; plain
JSON integers are accepted, floats are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Optional

from . import ewm, morph, oracle, sphdata, well
from .linalg import Vec, rank
from .rootlat import RootSystem, Weight, build_root_system

SCHEMA_VERSION = 1


class CaseError(ValueError):
    """Schema or data violation, with the offending field path."""


def _rat(x, path: str) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise CaseError(f"{path}: expected an exact rational, got {x!r}")
    try:
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise CaseError(f"{path}: bad rational {x!r} ({e})") from None
    raise CaseError(f"{path}: expected an exact rational, got {x!r}")


def _rat_vec(xs, path: str) -> Vec:
    if not isinstance(xs, list):
        raise CaseError(f"{path}: expected a list")
    return tuple(_rat(x, f"{path}[{i}]") for i, x in enumerate(xs))


def _rat_mat(rows, path: str) -> tuple[Vec, ...]:
    if not isinstance(rows, list):
        raise CaseError(f"{path}: expected a list of rows")
    return tuple(_rat_vec(r, f"{path}[{i}]") for i, r in enumerate(rows))


def encode_rat(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class WellFixture:
    chi_expr: str
    expected_bottom: Optional[tuple[Vec, ...]]
    expected_d_chi: Optional[int]


@dataclass(frozen=True)
class CaseFile:
    id: str
    citation: str
    kind: str                                   # "datum" or "table"
    path: Optional[str]
    ambient: RootSystem
    datum: Optional[sphdata.SphericalDatum]
    delta_prime: Any                            # list of ids or "auto"
    ctx: Optional[ewm.RestrictionContext]
    rk_xp: Optional[int]
    expected_generators: Optional[ewm.GeneratorTable]
    branching: Optional[oracle.BranchingSetup]
    well_case_spec: Optional[dict]
    well_fixtures: tuple[WellFixture, ...]
    expected_free_monoid: Optional[bool]

    def space(self) -> ewm.PCharSpace:
        if self.ctx is not None:
            return self.ctx.space
        if self.expected_generators is not None:
            return self.expected_generators.space
        raise CaseError(f"{self.id}: no character space available")

    def make_well_case(self, table: ewm.GeneratorTable) -> well.WellCase:
        if self.well_case_spec is None:
            raise CaseError(f"{self.id}: no well classification in the case file")
        return well.WellCase(
            table,
            tuple(self.well_case_spec.get("h_trivial", [])),
            tuple(self.well_case_spec.get("h_nontrivial", [])),
            int(self.well_case_spec.get("center_dim", 0)),
        )


def _load_colors(raw, path: str, nsigma: int) -> tuple[sphdata.Color, ...]:
    out = []
    seen = set()
    for i, c in enumerate(raw):
        p = f"{path}[{i}]"
        cid = c.get("id")
        if not isinstance(cid, str) or not cid:
            raise CaseError(f"{p}.id: missing color id")
        if cid in seen:
            raise CaseError(f"{p}.id: duplicate color id {cid!r}")
        seen.add(cid)
        moved = c.get("moved_by")
        if not isinstance(moved, list) or not all(isinstance(k, int) for k in moved):
            raise CaseError(f"{p}.moved_by: expected a list of root indices")
        pairing = _rat_vec(c.get("pairing", []), f"{p}.pairing")
        if len(pairing) != nsigma:
            raise CaseError(f"{p}.pairing: expected {nsigma} entries")
        rho = c.get("rho")
        out.append(
            sphdata.Color(
                cid,
                frozenset(moved),
                pairing,
                _rat_vec(rho, f"{p}.rho") if rho is not None else None,
            )
        )
    return tuple(out)


def _expected_table(raw, path: str, space: ewm.PCharSpace, rk: int) -> ewm.GeneratorTable:
    entries = []
    for i, g in enumerate(raw):
        p = f"{path}[{i}]"
        cid = g.get("color", g.get("id"))
        if not isinstance(cid, str):
            raise CaseError(f"{p}: missing color id")
        om = _rat_vec(g.get("omega"), f"{p}.omega")
        ch = _rat_vec(g.get("chi"), f"{p}.chi")
        if len(om) != rk:
            raise CaseError(f"{p}.omega: expected {rk} coordinates")
        if len(ch) != space.dim:
            raise CaseError(f"{p}.chi: expected {space.dim} coordinates")
        entries.append((cid, om, ch))
    t = ewm.GeneratorTable(space, tuple(entries))
    if rank(t.stacked()) != len(entries):
        raise CaseError(f"{path}: expected generators are not linearly independent")
    return t


def load_case(path) -> CaseFile:
    path = Path(path)
    if not path.exists():
        raise CaseError(f"case file not found: {path}")
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise CaseError(f"{path}: invalid JSON ({e})") from None
    return parse_case(raw, str(path))


def parse_case(raw: dict, src: Optional[str] = None) -> CaseFile:
    if raw.get("schema_version") != SCHEMA_VERSION:
        raise CaseError(f"schema_version: expected {SCHEMA_VERSION}")
    cid = raw.get("id")
    if not isinstance(cid, str):
        raise CaseError("id: missing")
    kind = raw.get("kind", "datum")
    if kind not in ("datum", "table"):
        raise CaseError(f"kind: unknown kind {kind!r}")
    try:
        ambient = build_root_system(raw["root_system"])
    except (KeyError, ValueError) as e:
        raise CaseError(f"root_system: {e}") from None

    space = ewm.PCharSpace(tuple(raw.get("p_char_basis", [])))

    datum = None
    ctx = None
    expected = None
    delta_prime = raw.get("delta_prime")

    if kind == "datum":
        sigma = tuple(
            Weight(v, "root") for v in _rat_mat(raw.get("sigma", []), "sigma")
        )
        xi = raw.get("xi_basis")
        xi_basis = (
            tuple(Weight(v, "root") for v in _rat_mat(xi, "xi_basis"))
            if xi is not None
            else None
        )
        colors = _load_colors(raw.get("colors", []), "colors", len(sigma))
        datum = sphdata.SphericalDatum(
            ambient=ambient,
            sp=frozenset(raw.get("sp", [])),
            sigma=sigma,
            colors=colors,
            xi_basis=xi_basis,
            wonderful=bool(raw.get("wonderful", False)),
            simply_connected=bool(raw.get("simply_connected", True)),
        )
        problems = sphdata.validate(datum)
        if problems:
            raise CaseError(f"{cid}: datum validation failed: " + "; ".join(problems))
        restriction = _rat_mat(raw.get("restriction", []), "restriction")
        boundary = raw.get("boundary_root_of", {})
        if not isinstance(boundary, dict):
            raise CaseError("boundary_root_of: expected an object")
        ctx = ewm.RestrictionContext(space, restriction, {k: int(v) for k, v in boundary.items()})
        if delta_prime is None:
            raise CaseError("delta_prime: missing (list of color ids or 'auto')")

    if raw.get("expected_generators") is not None:
        expected = _expected_table(
            raw["expected_generators"], "expected_generators", space, ambient.rank
        )
    if kind == "table" and expected is None:
        raise CaseError("table fixtures need expected_generators")

    branching = None
    if raw.get("branching_setup") is not None:
        b = raw["branching_setup"]
        try:
            sub = build_root_system(b["subgroup"])
        except (KeyError, ValueError) as e:
            raise CaseError(f"branching_setup.subgroup: {e}") from None
        branching = oracle.BranchingSetup(
            ambient,
            sub,
            _rat_mat(b.get("torus_map", []), "branching_setup.torus_map"),
            _rat_mat(b.get("chi_extension", []), "branching_setup.chi_extension"),
        )

    fixtures = []
    for i, f in enumerate(raw.get("well_fixtures", [])):
        p = f"well_fixtures[{i}]"
        expr = f.get("chi")
        if not isinstance(expr, str):
            raise CaseError(f"{p}.chi: expected a character expression string")
        eb = f.get("expected_bottom")
        fixtures.append(
            WellFixture(
                expr,
                _rat_mat(eb, f"{p}.expected_bottom") if eb is not None else None,
                int(f["expected_d_chi"]) if "expected_d_chi" in f else None,
            )
        )

    rk_xp = raw.get("rk_XP")
    efm = raw.get("expected_free_monoid")
    return CaseFile(
        id=cid,
        citation=str(raw.get("citation", "")),
        kind=kind,
        path=src,
        ambient=ambient,
        datum=datum,
        delta_prime=delta_prime,
        ctx=ctx,
        rk_xp=int(rk_xp) if rk_xp is not None else None,
        expected_generators=expected,
        branching=branching,
        well_case_spec=raw.get("well_case"),
        well_fixtures=tuple(fixtures),
        expected_free_monoid=bool(efm) if efm is not None else None,
    )


# ---------------------------------------------------------------------------


@dataclass
class RegressionReport:
    case_id: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    table: Optional[ewm.GeneratorTable] = None
    chosen_subset: Optional[frozenset[str]] = None

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append((name, passed, detail))


def resolve_delta_prime(case: CaseFile) -> list[frozenset[str]]:
    """Candidate subsets: the declared one, or all minimal parabolic ones."""
    if case.delta_prime == "auto":
        return morph.minimal_parabolic_subsets(case.datum)
    return [frozenset(case.delta_prime)]


def compute_table(case: CaseFile) -> tuple[ewm.GeneratorTable, frozenset[str]]:
    """Generator table of a datum case, resolving 'auto' subsets."""
    if case.kind == "table":
        return case.expected_generators, frozenset()
    last_error = None
    candidates = resolve_delta_prime(case)
    for sub in candidates:
        try:
            t = ewm.solve_generators(case.datum, sub, case.ctx)
        except ewm.SolveError as e:
            last_error = e
            continue
        if case.expected_generators is None or t.as_set() == case.expected_generators.as_set():
            return t, sub
        last_error = ewm.SolveError(f"generators differ for subset {sorted(sub)}")
    if last_error is not None:
        raise last_error
    raise ewm.SolveError(f"{case.id}: no parabolic subset found")


def run_regression(case: CaseFile) -> RegressionReport:
    rep = RegressionReport(case.id)

    if case.kind == "table":
        table = case.expected_generators
        rep.table = table
        rep.add("generators-independent", True, f"{len(table.entries)} generators")
    else:
        try:
            table, chosen = compute_table(case)
        except ewm.SolveError as e:
            rep.add("generators", False, str(e))
            return rep
        rep.table = table
        rep.chosen_subset = chosen
        if case.expected_generators is not None:
            same = table.as_set() == case.expected_generators.as_set()
            rep.add(
                "generators",
                same,
                f"subset {sorted(chosen)}",
            )
        else:
            rep.add("generators", True, "no expected table recorded")
        if case.rk_xp is not None:
            r = ewm.rank_identities(table, case.datum, case.rk_xp, chosen)
            rep.add("rank-chars", bool(r.chars_identity), r.details)
            if r.kernel_identity is None:
                rep.add("rank-kernel", True, "not applicable")
            else:
                rep.add("rank-kernel", bool(r.kernel_identity), r.details)

    if case.well_case_spec is not None and case.well_fixtures:
        try:
            w = case.make_well_case(rep.table)
        except ValueError as e:
            rep.add("well-case", False, str(e))
            return rep
        space = rep.table.space
        for fx in case.well_fixtures:
            chi = space.parse(fx.chi_expr)
            if fx.expected_bottom is not None:
                got = well.bottom(w, chi)
                ok = sorted(got) == sorted(fx.expected_bottom)
                rep.add(f"bottom({fx.chi_expr})", ok, f"{len(got)} elements")
            if fx.expected_d_chi is not None:
                ok = well.d_chi(w, chi) == fx.expected_d_chi
                rep.add(f"d_chi({fx.chi_expr})", ok, "")

    if case.expected_free_monoid is not None:
        if case.well_case_spec is None:
            rep.add("free-monoid", False, "no well classification")
        else:
            try:
                w = case.make_well_case(rep.table)
                got = well.free_monoid_check(w)
                rep.add("free-monoid", got == case.expected_free_monoid, f"got {got}")
            except ValueError as e:
                rep.add("free-monoid", False, str(e))
    return rep


def bundled_case_dir() -> Path:
    return Path(str(resources.files("ewmtool").joinpath("cases")))


def iter_case_paths(directory=None) -> list[Path]:
    d = Path(directory) if directory is not None else bundled_case_dir()
    return sorted(p for p in d.glob("*.json"))


def run_corpus(directory=None) -> list[RegressionReport]:
    return [run_regression(load_case(p)) for p in iter_case_paths(directory)]

"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 input or data error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import cases, ewm, morph, oracle, well
from .linalg import Vec


def _fmt_vec(v: Vec) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _fmt_weight(v: Vec, prefix: str = "w") -> str:
    terms = []
    for i, c in enumerate(v, start=1):
        if c == 0:
            continue
        if c == 1:
            terms.append(f"+{prefix}{i}")
        else:
            terms.append(f"{'+' if c > 0 else '-'}{abs(c)}*{prefix}{i}")
    if not terms:
        return "0"
    s = "".join(terms)
    return s[1:] if s.startswith("+") else s


def _json_vec(v: Vec) -> list[str]:
    return [str(x) for x in v]


def _load(path: str) -> cases.CaseFile:
    return cases.load_case(path)


def _print_table(case: cases.CaseFile, table: ewm.GeneratorTable, fmt: str) -> None:
    if fmt == "json":
        payload = {
            "id": case.id,
            "p_char_basis": list(table.space.labels),
            "generators": [
                {"color": cid, "omega": _json_vec(o), "chi": _json_vec(c)}
                for cid, o, c in table.entries
            ],
        }
        print(json.dumps(payload, indent=1))
        return
    width = max(len(cid) for cid in table.ids())
    print(f"# {case.id}: free generators (omega, chi)")
    for cid, o, c in table.entries:
        print(f"{cid:<{width}}  omega = {_fmt_weight(o):<22} chi = {table.space.show(c)}")


def cmd_generators(args) -> int:
    case = _load(args.case)
    table, chosen = cases.compute_table(case)
    _print_table(case, table, args.format)
    if case.kind == "datum" and args.format == "text":
        print(f"# parabolic subset used: {sorted(chosen)}")
    return 0


def cmd_subsets(args) -> int:
    case = _load(args.case)
    if case.datum is None:
        raise cases.CaseError("subsets need a datum case")
    d = case.datum
    if args.subset:
        ids = [s.strip() for s in args.subset.split(",") if s.strip()]
        v = morph.classify_subset(d, ids)
        print(
            f"{sorted(v.subset)}: distinguished={v.distinguished} parabolic={v.parabolic}"
            + (f" witness={ {k: str(x) for k, x in v.witness.items()} }" if v.witness else "")
        )
        return 0
    if args.minimal:
        subs = morph.minimal_parabolic_subsets(d, flag_filter=not args.no_flag_filter)
        for s in subs:
            print(sorted(s))
        return 0
    # full enumeration of the requested kind
    from itertools import combinations

    ids = d.color_ids()
    for k in range(len(ids) + 1):
        for combo in combinations(ids, k):
            v = morph.classify_subset(d, combo)
            hit = v.parabolic if args.kind == "parabolic" else v.distinguished
            if hit:
                print(sorted(combo))
    return 0


def cmd_well(args) -> int:
    case = _load(args.case)
    table, _ = cases.compute_table(case)
    w = case.make_well_case(table)
    chi = table.space.parse(args.chi)
    if args.bottom:
        b = well.bottom(w, chi)
        print(f"# bottom of the {args.chi}-well: d_chi = {len(b)}")
        for v in b:
            print(_fmt_weight(v))
        return 0
    res = well.chi_well(w, chi, args.bound)
    print(f"# {args.chi}-well up to coefficient sum {args.bound}: {len(res.lambdas)} weights")
    for lam, coeffs in res.lambdas:
        cs = ", ".join(f"{cid}:{a}" for cid, a in coeffs.items() if a)
        print(f"{_fmt_weight(lam):<24} [{cs or '0'}]")
    return 0


def cmd_verify(args) -> int:
    case = _load(args.case)
    if case.branching is None:
        raise cases.CaseError(f"{case.id}: no branching setup in the case file")
    table, _ = cases.compute_table(case)
    chi = table.space.parse(args.chi)
    rep = oracle.crosscheck(case.branching, table, chi, args.bound)
    print(
        f"{case.id} chi={args.chi} bound={args.bound}: {rep.checked} weights, "
        f"{len(rep.mismatches)} mismatches, {len(rep.high_multiplicity)} multiplicity>=2"
        + (" (dual pair)" if rep.dualized else "")
    )
    for lam, what in rep.mismatches:
        print(f"  mismatch at {_fmt_weight(lam)}: {what}")
    for lam, m in rep.high_multiplicity:
        print(f"  multiplicity {m} at {_fmt_weight(lam)}")
    return 0 if rep.ok else 1


def cmd_regress(args) -> int:
    directory = args.dir or os.environ.get("EWMTOOL_CASE_DIR")
    reports = cases.run_corpus(directory)
    bad = 0
    for rep in reports:
        status = "PASS" if rep.ok else "FAIL"
        if not rep.ok:
            bad += 1
        detail = "; ".join(n for n, ok, _ in rep.checks if not ok)
        print(f"{status} {rep.case_id}" + (f"  [{detail}]" if detail else ""))
    print(f"# {len(reports) - bad}/{len(reports)} cases pass")
    return 0 if bad == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ewmtool",
        description="Extended weight monoid computations for spherical homogeneous spaces",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generators", help="free generators of the extended weight monoid")
    g.add_argument("case")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.set_defaults(fn=cmd_generators)

    s = sub.add_parser("subsets", help="distinguished/parabolic subsets of colors")
    s.add_argument("case")
    s.add_argument("--kind", choices=("distinguished", "parabolic"), default="parabolic")
    s.add_argument("--minimal", action="store_true")
    s.add_argument("--subset", help="comma-separated color ids to classify")
    s.add_argument("--no-flag-filter", action="store_true")
    s.set_defaults(fn=cmd_subsets)

    w = sub.add_parser("well", help="enumerate a chi-well or its bottom")
    w.add_argument("case")
    w.add_argument("--chi", required=True, help="character, e.g. '3*w1' or '0'")
    w.add_argument("--bound", type=int, default=6)
    w.add_argument("--bottom", action="store_true")
    w.set_defaults(fn=cmd_well)

    v = sub.add_parser("verify", help="cross-check the monoid against branching")
    v.add_argument("case")
    v.add_argument("--chi", required=True)
    v.add_argument("--bound", type=int, default=4)
    v.set_defaults(fn=cmd_verify)

    r = sub.add_parser("regress", help="run the bundled (or given) case corpus")
    r.add_argument("dir", nargs="?", default=None)
    r.set_defaults(fn=cmd_regress)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (cases.CaseError, ewm.SolveError, well.FreeMonoidError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

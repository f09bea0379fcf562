"""Command-line front end.

Every invocation prints exactly one JSON value on stdout (an object for
``--pd`` input, an array for ``--catalog`` and for ``verify``) and a short
human-readable summary on stderr.  Exit codes: 0 success, 1 domain refusal
(non-proper input for unknot/arf, unrealizable selection for solve, failed
verification), 2 input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arf as arf_mod
from . import gf2
from .codec import OrientedPDCode, load_catalog, parse_pd
from .diagram import Diagram, build_diagram, flip_crossings, is_proper
from .errors import NotProperError, RegionflipError
from .regions import incidence_matrix, minimal_regions, solve_regions
from .unknot import BasePointOrdering, default_ordering, is_descending, unknot_regions
from .verify import RegionflipCatalogError, run_verification

EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_INPUT = 2


def _info_payload(name: str | None, d: Diagram) -> dict:
    payload = {
        "c": d.crossing_count,
        "n": d.component_count,
        "faces": len(d.faces),
        "rank": gf2.rank(incidence_matrix(d).matrix),
        "proper": is_proper(d),
    }
    if name is not None:
        payload["name"] = name
    return payload


def _parse_ordering(text: str, d: Diagram) -> BasePointOrdering:
    entries = []
    for item in text.split(","):
        parts = item.strip().split(":")
        if len(parts) != 3 or parts[2] not in ("f", "r"):
            raise ValueError(
                f"bad ordering item {item!r}; expected component:arc:f|r"
            )
        entries.append((int(parts[0]), int(parts[1]), parts[2] == "f"))
    ordering = BasePointOrdering(tuple(entries))
    ordering.validate(d)
    return ordering


def _cmd_info(args, name: str | None, d: Diagram) -> tuple[dict, int]:
    return _info_payload(name, d), EXIT_OK


def _cmd_solve(args, name: str | None, d: Diagram) -> tuple[dict, int]:
    if args.q.strip():
        q = frozenset(int(tok) for tok in args.q.split(","))
    else:
        q = frozenset()
    bad = [k for k in q if not (0 <= k < d.crossing_count)]
    if bad:
        raise ValueError(f"crossing ids out of range: {sorted(bad)}")
    solver = minimal_regions if args.minimal else solve_regions
    regions = solver(d, q)
    payload = _info_payload(name, d)
    payload.update({
        "q": sorted(q),
        "solvable": regions is not None,
        "regions": sorted(regions) if regions is not None else None,
        "minimal": bool(args.minimal),
    })
    return payload, EXIT_OK if regions is not None else EXIT_REFUSED


def _cmd_unknot(args, name: str | None, d: Diagram) -> tuple[dict, int]:
    ordering = _parse_ordering(args.ordering, d) if args.ordering else default_ordering(d)
    payload = _info_payload(name, d)
    try:
        regions = unknot_regions(d, ordering, minimal=args.minimal)
    except NotProperError as exc:
        payload["error"] = {"type": "NotProperError", "message": str(exc)}
        return payload, EXIT_REFUSED
    flip_set: set[int] = set()
    for r in regions:
        flip_set ^= d.faces[r].boundary_crossings
    payload.update({
        "q": sorted(flip_set),
        "regions": sorted(regions),
        "descending_after": is_descending(flip_crossings(d, flip_set), ordering),
        "minimal": bool(args.minimal),
    })
    return payload, EXIT_OK


def _cmd_arf(args, name: str | None, d: Diagram) -> tuple[dict, int]:
    ordering = _parse_ordering(args.ordering, d) if args.ordering else default_ordering(d)
    payload = _info_payload(name, d)
    try:
        value = arf_mod.arf_link(d)
        regions = unknot_regions(d, ordering, minimal=args.minimal)
        via = arf_mod.arf_via_regions(d, regions, ordering)
    except NotProperError as exc:
        payload["error"] = {"type": "NotProperError", "message": str(exc)}
        return payload, EXIT_REFUSED
    payload.update({
        "arf": value,
        "arf_via_regions": via,
        "regions": sorted(regions),
        "agree": value == via,
    })
    return payload, EXIT_OK


_COMMANDS = {
    "info": _cmd_info,
    "solve": _cmd_solve,
    "unknot": _cmd_unknot,
    "arf": _cmd_arf,
}


def _emit(value, summary: str) -> None:
    sys.stdout.write(json.dumps(value, sort_keys=True) + "\n")
    sys.stderr.write(summary + "\n")


def _load_inputs(args) -> tuple[list[tuple[str | None, OrientedPDCode]], int]:
    if args.pd is not None:
        return [(None, parse_pd(args.pd))], EXIT_OK
    with open(args.catalog, "rb") as fh:
        loaded = load_catalog(fh)
    for diag in loaded.diagnostics:
        sys.stderr.write(f"{args.catalog}:{diag.line}: {diag.message}\n")
    status = EXIT_INPUT if loaded.diagnostics else EXIT_OK
    return [(name, code) for name, code in loaded.entries], status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regionflip",
        description="Region crossing changes on link diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_flags(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--pd", help="one diagram in the native grammar")
        group.add_argument("--catalog", help="path to a JSONL catalog")

    p_info = sub.add_parser("info", help="crossing/component/face/rank report")
    add_input_flags(p_info)

    p_solve = sub.add_parser("solve", help="realize a crossing selection by region changes")
    add_input_flags(p_solve)
    p_solve.add_argument("--q", required=True,
                         help="comma-separated crossing ids ('' for the empty selection)")
    p_solve.add_argument("--minimal", action="store_true",
                         help="return a minimum-cardinality region set")

    p_unknot = sub.add_parser("unknot", help="regions that trivialize a proper link")
    add_input_flags(p_unknot)
    p_unknot.add_argument("--ordering", help="component:arc:f|r list, comma separated")
    p_unknot.add_argument("--minimal", action="store_true")

    p_arf = sub.add_parser("arf", help="Arf invariant by determinant oracle and region route")
    add_input_flags(p_arf)
    p_arf.add_argument("--ordering", help="component:arc:f|r list, comma separated")
    p_arf.add_argument("--minimal", action="store_true")

    p_verify = sub.add_parser("verify", help="run every property suite")
    p_verify.add_argument("--catalog", help="JSONL catalog to verify (default: bundled)")
    p_verify.add_argument("--max-crossings", type=int, default=7,
                          help="exhaustive-suite crossing bound (default 7)")
    p_verify.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p_verify.add_argument("--seed", type=int, default=None, help="seed for sampled suites")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    try:
        if args.command == "verify":
            kwargs = {
                "max_crossings": args.max_crossings,
                "jobs": args.jobs,
                "catalog_path": args.catalog,
            }
            if args.seed is not None:
                kwargs["seed"] = args.seed
            results = run_verification(**kwargs)
            payload = [r.as_dict() for r in results]
            failed = [r for r in results if not r.passed]
            _emit(payload, f"verify: {len(results) - len(failed)}/{len(results)} checks passed")
            return EXIT_OK if not failed else EXIT_REFUSED

        handler = _COMMANDS[args.command]
        inputs, input_status = _load_inputs(args)
        reports = []
        worst = EXIT_OK
        for name, code in inputs:
            payload, status = handler(args, name, build_diagram(code))
            reports.append(payload)
            worst = max(worst, status)
        if args.pd is not None:
            _emit(reports[0], f"{args.command}: done")
        else:
            _emit(reports, f"{args.command}: {len(reports)} diagrams")
        return max(worst, input_status)
    except (RegionflipError, RegionflipCatalogError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


def main() -> None:  # console-script entry point
    raise SystemExit(run())


if __name__ == "__main__":
    main()

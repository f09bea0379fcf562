"""Batch verification suites over the bundled catalog and random instances.

Each suite checks one executable law at desk scale and reports one record per
(suite, diagram) pair.  The CLI ``verify`` subcommand is a thin wrapper; the
acceptance tests run the same functions with pinned seeds.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import arf, gf2
from .catalog import bundled_diagrams
from .codec import parse_pd, serialize_pd
from .construct import pass_tangle_center, pass_tangle_closure
from .diagram import Diagram, build_diagram, flip_crossings, is_proper, smooth_crossing
from .errors import NotProperError
from .generate import random_code, random_diagram
from .regions import (
    admissible_by_parity,
    brute_force_regions,
    incidence_matrix,
    minimal_regions,
    solve_regions,
)
from .unknot import BasePointOrdering, descending_selection, is_descending, unknot_regions

DEFAULT_SEED = 20260808


class RegionflipCatalogError(Exception):
    """External catalog passed to verify had malformed lines."""

    def __init__(self, path: str, diagnostics):
        lines = "; ".join(f"line {d.line}: {d.message}" for d in diagnostics)
        super().__init__(f"{path}: {lines}")
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class CheckResult:
    suite: str
    diagram: str
    passed: bool
    detail: str

    def as_dict(self) -> dict:
        return asdict(self)


def _result(suite: str, diagram: str, passed: bool, detail: str) -> CheckResult:
    return CheckResult(suite, diagram, bool(passed), detail)


# -- per-diagram suites ------------------------------------------------------


def check_rank_law(name: str, d: Diagram) -> list[CheckResult]:
    r = gf2.rank(incidence_matrix(d).matrix)
    want = d.crossing_count - d.component_count + 1
    return [_result("rank_law", name, r == want, f"rank={r} expected={want}")]


def check_rank_law_random(seed: int, count: int = 200, max_crossings: int = 12) -> list[CheckResult]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        d = random_diagram(rng, max_crossings)
        if gf2.rank(incidence_matrix(d).matrix) != d.crossing_count - d.component_count + 1:
            bad += 1
    return [_result("rank_law", f"random[{count}]", bad == 0, f"failures={bad}")]


def check_hopf_obstruction(name: str, d: Diagram) -> list[CheckResult]:
    single = solve_regions(d, frozenset({0}))
    both = minimal_regions(d, frozenset({0, 1}))
    ok = single is None and both is not None and len(both) == 1
    return [_result(
        "hopf_obstruction", name, ok,
        f"single={'none' if single is None else sorted(single)} "
        f"both_minimal={'none' if both is None else sorted(both)}",
    )]


def check_admissibility_equivalence(
    name: str, d: Diagram, seed: int, sample: int = 200, exhaustive_limit: int = 5
) -> list[CheckResult]:
    c = d.crossing_count
    if c <= exhaustive_limit:
        selections = [
            frozenset(k for k in range(c) if (mask >> k) & 1) for mask in range(1 << c)
        ]
    else:
        rng = random.Random(seed)
        selections = [
            frozenset(k for k in range(c) if rng.random() < 0.5) for _ in range(sample)
        ]
    bad = 0
    detail = ""
    for q in selections:
        parity = admissible_by_parity(d, q)
        solved = solve_regions(d, q)
        brute = brute_force_regions(d, q)
        agree = parity == (solved is not None) == (brute is not None)
        if agree and solved is not None:
            mini = minimal_regions(d, q)
            agree = mini is not None and brute is not None and len(mini) == len(brute) \
                and sorted(mini) == sorted(brute)
        if not agree:
            bad += 1
            if not detail:
                detail = f"first disagreement at q={sorted(q)}"
    return [_result(
        "admissibility_equivalence", name, bad == 0,
        detail or f"checked={len(selections)} selections",
    )]


def check_unknotting_criterion(name: str, d: Diagram, seed: int) -> list[CheckResult]:
    out: list[CheckResult] = []
    if is_proper(d):
        regions = unknot_regions(d)
        flip_set: set[int] = set()
        for r in regions:
            flip_set ^= d.faces[r].boundary_crossings
        ok = is_descending(flip_crossings(d, flip_set))
        out.append(_result(
            "unknotting_criterion", name, ok,
            f"regions={sorted(regions)} descending_after={ok}",
        ))
    else:
        try:
            unknot_regions(d)
            out.append(_result("unknotting_criterion", name, False, "non-proper link was not refused"))
        except NotProperError:
            rng = random.Random(seed)
            bad = 0
            for _ in range(5):
                order = list(range(d.component_count))
                rng.shuffle(order)
                entries = tuple(
                    (cid, rng.choice(d.components[cid]), rng.random() < 0.5) for cid in order
                )
                q = descending_selection(d, BasePointOrdering(entries))
                if admissible_by_parity(d, q):
                    bad += 1
            out.append(_result(
                "unknotting_criterion", name, bad == 0,
                f"refused; {5 - bad}/5 random descending selections non-admissible",
            ))
    return out


def check_linking_parity_invariance(name: str, d: Diagram) -> list[CheckResult]:
    before = d.linking.total_parities()
    bad = [
        f.id for f in d.faces
        if flip_crossings(d, set(f.boundary_crossings)).linking.total_parities() != before
    ]
    return [_result(
        "linking_parity_invariance", name, not bad,
        f"changed at faces {bad}" if bad else f"all {len(d.faces)} faces preserve parities",
    )]


def check_region_weight_parity(name: str, d: Diagram) -> list[CheckResult]:
    odd = [f.id for f in d.faces if arf.region_signs(d, f.id).arf_weight % 2]
    return [_result(
        "region_weight_parity", name, not odd,
        f"odd weights at faces {odd}" if odd else "all region weights even",
    )]


def check_pass_move_region() -> list[CheckResult]:
    d = pass_tangle_closure()
    center = pass_tangle_center(d)
    w = arf.region_signs(d, center).arf_weight
    return [_result("region_weight_parity", "pass_tangle", w == 2, f"center weight={w} expected=2")]


def check_arf_change_law(name: str, d: Diagram) -> list[CheckResult]:
    if not is_proper(d) or d.crossing_count > 8:
        return []
    base = arf.arf_link(d)
    bad = []
    for f in d.faces:
        predicted = arf.arf_delta(d, f.id)
        actual = base ^ arf.arf_link(flip_crossings(d, set(f.boundary_crossings)))
        if predicted != actual:
            bad.append(f.id)
    return [_result(
        "arf_change_law", name, not bad,
        f"mismatch at faces {bad}" if bad else f"law holds on {len(d.faces)} regions",
    )]


def check_arf_unknotting_consistency(name: str, d: Diagram) -> list[CheckResult]:
    if not is_proper(d):
        return []
    regions = unknot_regions(d)
    via = arf.arf_via_regions(d, regions)
    oracle = arf.arf_link(d)
    return [_result(
        "arf_unknotting_consistency", name, via == oracle,
        f"via_regions={via} determinant_oracle={oracle}",
    )]


def _smoothing_values(d: Diagram) -> set[int]:
    if d.component_count == 1:
        return {arf.arf_knot(d)}
    values = set()
    for k in range(d.crossing_count):
        cr = d.crossings[k]
        if d.component_of_arc[cr.under_in] != d.component_of_arc[cr.over_in]:
            values |= _smoothing_values(smooth_crossing(d, k))
    return values


def check_smoothing_independence(name: str, d: Diagram) -> list[CheckResult]:
    if not is_proper(d) or d.component_count < 2:
        return []
    values = _smoothing_values(d)
    return [_result(
        "smoothing_independence", name, len(values) == 1,
        f"values over all smoothing sequences: {sorted(values)}",
    )]


def check_codec_roundtrip(seed: int, count: int = 1000) -> list[CheckResult]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        code = random_code(rng)
        if parse_pd(serialize_pd(code)) != code:
            bad += 1
    return [_result("codec_roundtrip", f"random[{count}]", bad == 0, f"failures={bad}")]


# -- orchestration -----------------------------------------------------------

_CATALOG_SUITES = (
    "rank_law",
    "admissibility_equivalence",
    "unknotting_criterion",
    "linking_parity_invariance",
    "region_weight_parity",
    "arf_change_law",
    "arf_unknotting_consistency",
    "smoothing_independence",
)


def _run_catalog_task(args: tuple[str, str, int, int, str | None]) -> list[dict]:
    suite, name, seed, max_crossings, catalog_path = args
    if catalog_path is None:
        d = bundled_diagrams()[name]
    else:
        from .codec import load_catalog

        with open(catalog_path, "rb") as fh:
            entries = dict(load_catalog(fh).entries)
        d = build_diagram(entries[name])
    if suite == "rank_law":
        results = check_rank_law(name, d)
    elif suite == "admissibility_equivalence":
        results = [] if d.crossing_count > max_crossings else \
            check_admissibility_equivalence(name, d, seed)
    elif suite == "unknotting_criterion":
        results = check_unknotting_criterion(name, d, seed)
    elif suite == "linking_parity_invariance":
        results = check_linking_parity_invariance(name, d)
    elif suite == "region_weight_parity":
        results = check_region_weight_parity(name, d)
    elif suite == "arf_change_law":
        results = check_arf_change_law(name, d)
    elif suite == "arf_unknotting_consistency":
        results = check_arf_unknotting_consistency(name, d)
    elif suite == "smoothing_independence":
        results = check_smoothing_independence(name, d)
    else:  # pragma: no cover
        raise ValueError(suite)
    return [r.as_dict() for r in results]


def run_verification(
    max_crossings: int = 7,
    jobs: int = 1,
    seed: int = DEFAULT_SEED,
    catalog_path: str | None = None,
) -> list[CheckResult]:
    """Run every suite; ``catalog_path`` overrides the bundled catalog."""
    if catalog_path is None:
        names = list(bundled_diagrams())
    else:
        from .codec import load_catalog

        with open(catalog_path, "rb") as fh:
            loaded = load_catalog(fh)
        if loaded.diagnostics:
            raise RegionflipCatalogError(catalog_path, loaded.diagnostics)
        names = [name for name, _ in loaded.entries]
    tasks = [
        (suite, name, seed + i, max_crossings, catalog_path)
        for suite in _CATALOG_SUITES
        for i, name in enumerate(names)
    ]
    results: list[CheckResult] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_run_catalog_task, tasks):
                results.extend(CheckResult(**r) for r in chunk)
    else:
        for task in tasks:
            results.extend(CheckResult(**r) for r in _run_catalog_task(task))
    # fixed-instance and sampled suites, catalog-independent
    hopf = build_diagram(parse_pd("X(1,4,2,3) X(3,2,4,1)"))
    results.extend(check_hopf_obstruction("hopf", hopf))
    results.extend(check_rank_law_random(seed))
    results.extend(check_pass_move_region())
    results.extend(check_codec_roundtrip(seed))
    order = {s: i for i, s in enumerate(
        ("rank_law", "hopf_obstruction", "admissibility_equivalence",
         "unknotting_criterion", "linking_parity_invariance",
         "region_weight_parity", "arf_change_law", "arf_unknotting_consistency",
         "smoothing_independence", "codec_roundtrip")
    )}
    results.sort(key=lambda r: (order[r.suite], r.diagram))
    return results

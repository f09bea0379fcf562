"""Unknotting via descending diagrams.

Walking the components in a fixed order from fixed base points, a diagram is
descending when every crossing is first met on its over strand; such diagrams
are trivial links, which lets the pipeline certify triviality without any
general unknot recognition.  Flipping exactly the first-met-under crossings
makes any diagram descending, and for proper links that crossing set is
always realizable by region crossing changes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, is_proper
from .errors import NotProperError
from .regions import RegionSelection, minimal_regions, solve_regions

CrossingSelection = frozenset[int]


@dataclass(frozen=True)
class BasePointOrdering:
    """Component traversal order with a base arc and direction for each."""

    entries: tuple[tuple[int, int, bool], ...]  # (component, base arc, forward)

    def validate(self, diagram: Diagram) -> None:
        comps = [e[0] for e in self.entries]
        if sorted(comps) != list(range(diagram.component_count)):
            raise ValueError("ordering must list every component exactly once")
        for comp, arc, _ in self.entries:
            if diagram.crossing_count and diagram.component_of_arc.get(arc) != comp:
                raise ValueError(f"arc {arc} is not on component {comp}")


def default_ordering(diagram: Diagram) -> BasePointOrdering:
    """Components in index order, base at the lowest arc label, forward."""
    entries = []
    for cid, circuit in enumerate(diagram.components):
        base = min(circuit) if circuit else 0
        entries.append((cid, base, True))
    return BasePointOrdering(tuple(entries))


def _passes(diagram: Diagram, ordering: BasePointOrdering):
    """Yield (crossing, is_over) in traversal order; each crossing twice."""
    ordering.validate(diagram)
    for comp, base, forward in ordering.entries:
        circuit = diagram.components[comp]
        if not circuit:
            continue
        idx = circuit.index(base)
        m = len(circuit)
        for step in range(m):
            arc = circuit[(idx + step) % m] if forward else circuit[(idx - step) % m]
            if forward:
                k, slot = diagram.head_end[arc]
            else:
                k, slot = diagram.tail_end[arc]
            under = slot == 0 if forward else slot == 2
            yield k, not under


def descending_selection(diagram: Diagram, ordering: BasePointOrdering | None = None) -> CrossingSelection:
    """Crossings first met on their under strand; flipping them descends the diagram."""
    if ordering is None:
        ordering = default_ordering(diagram)
    first: dict[int, bool] = {}
    for k, is_over in _passes(diagram, ordering):
        first.setdefault(k, is_over)
    assert len(first) == diagram.crossing_count
    return frozenset(k for k, over in first.items() if not over)


def is_descending(diagram: Diagram, ordering: BasePointOrdering | None = None) -> bool:
    return not descending_selection(diagram, ordering)


def unknot_regions(
    diagram: Diagram,
    ordering: BasePointOrdering | None = None,
    minimal: bool = False,
) -> RegionSelection:
    """Regions whose combined flip turns the diagram into a descending, hence
    trivial, link.  Refuses non-proper links, for which no unknotting set is
    realizable."""
    if not is_proper(diagram):
        parities = diagram.linking.total_parities()
        raise NotProperError(
            "link is not proper: component total-linking parities are "
            f"{list(parities)}"
        )
    target = descending_selection(diagram, ordering)
    solver = minimal_regions if minimal else solve_regions
    regions = solver(diagram, target)
    if regions is None:  # cannot happen for proper links
        raise RuntimeError("descending selection unexpectedly not realizable")
    return regions

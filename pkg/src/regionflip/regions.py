"""Region crossing change solvers.

A crossing selection is realizable by region crossing changes exactly when
its characteristic vector lies in the row space of the face/crossing
incidence matrix; equivalently, when every component of the link meets the
selected inter-component crossings an even number of times.  Both criteria
are implemented and cross-checked, and an exhaustive oracle applies the
definition directly by composing per-region flips.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .diagram import BLACK, Diagram
from .errors import TooLargeError

CrossingSelection = frozenset[int]
RegionSelection = frozenset[int]

BRUTE_FORCE_FACE_LIMIT = 22


@dataclass(frozen=True)
class IncidenceMatrix:
    """Face-by-crossing incidence over GF(2); rows grouped black then white."""

    matrix: gf2.BitMatrix
    row_faces: tuple[int, ...]  # face id of each row
    col_crossings: tuple[int, ...]  # crossing id of each column

    def row_of_face(self, face: int) -> int:
        return self.row_faces.index(face)


@dataclass(frozen=True)
class AdmissibilityGraph:
    """Per-component degrees of the selected inter-component crossings."""

    degrees: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def all_even(self) -> bool:
        return all(d % 2 == 0 for d in self.degrees)


def incidence_matrix(diagram: Diagram) -> IncidenceMatrix:
    c = diagram.crossing_count
    colors = diagram.colors_from_zero
    blacks = [f.id for f in diagram.faces if colors[f.id] == BLACK]
    whites = [f.id for f in diagram.faces if colors[f.id] != BLACK]
    order = tuple(blacks + whites)
    rows = []
    for fid in order:
        bits = 0
        for k in diagram.faces[fid].boundary_crossings:
            bits |= 1 << k
        rows.append(bits)
    return IncidenceMatrix(
        gf2.BitMatrix(tuple(rows), c), order, tuple(range(c))
    )


def _selection_mask(selection: CrossingSelection, c: int) -> int:
    bad = [k for k in selection if not (0 <= k < c)]
    if bad:
        raise ValueError(f"crossing ids out of range: {sorted(bad)}")
    mask = 0
    for k in selection:
        mask |= 1 << k
    return mask


def admissibility_graph(diagram: Diagram, selection: CrossingSelection) -> AdmissibilityGraph:
    n = diagram.component_count
    degrees = [0] * n
    edges = []
    for k in sorted(selection):
        cr = diagram.crossings[k]
        i = diagram.component_of_arc[cr.under_in]
        j = diagram.component_of_arc[cr.over_in]
        if i != j:
            degrees[i] += 1
            degrees[j] += 1
            edges.append((min(i, j), max(i, j)))
    return AdmissibilityGraph(tuple(degrees), tuple(edges))


def admissible_by_parity(diagram: Diagram, selection: CrossingSelection) -> bool:
    """Parity criterion: every component must meet the selection evenly."""
    _selection_mask(selection, diagram.crossing_count)
    return admissibility_graph(diagram, selection).all_even()


def _faces_of_row_mask(inc: IncidenceMatrix, mask: int) -> RegionSelection:
    out = set()
    m = mask
    while m:
        low = m & -m
        out.add(inc.row_faces[low.bit_length() - 1])
        m ^= low
    return frozenset(out)


def solve_regions(diagram: Diagram, selection: CrossingSelection) -> RegionSelection | None:
    """A region set whose combined boundary flips exactly the selection."""
    target = _selection_mask(selection, diagram.crossing_count)
    inc = incidence_matrix(diagram)
    solution = gf2.solve(inc.matrix, target)
    if (solution is not None) != admissible_by_parity(diagram, selection):
        raise RuntimeError(
            "internal invariant violated: parity criterion and linear solve disagree"
        )
    if solution is None:
        return None
    particular, _ = solution
    return _faces_of_row_mask(inc, particular)


def minimal_regions(diagram: Diagram, selection: CrossingSelection) -> RegionSelection | None:
    """Minimum-cardinality solution; ties broken by smallest sorted face list."""
    target = _selection_mask(selection, diagram.crossing_count)
    inc = incidence_matrix(diagram)
    solution = gf2.solve(inc.matrix, target)
    if solution is None:
        return None
    particular, basis = solution
    best_mask = None
    best_key = None
    for combo in range(1 << len(basis)):
        mask = particular
        t = combo
        while t:
            low = t & -t
            mask ^= basis[low.bit_length() - 1]
            t ^= low
        key = (mask.bit_count(), tuple(sorted(_faces_of_row_mask(inc, mask))))
        if best_key is None or key < best_key:
            best_key = key
            best_mask = mask
    assert best_mask is not None
    return _faces_of_row_mask(inc, best_mask)


def brute_force_regions(diagram: Diagram, selection: CrossingSelection) -> RegionSelection | None:
    """Exhaustive oracle: try every region subset, composing boundary flips.

    Gray-code enumeration keeps each step to one XOR.  Returns a minimum
    cardinality solution under the same tie-break as :func:`minimal_regions`.
    """
    target = _selection_mask(selection, diagram.crossing_count)
    nf = len(diagram.faces)
    if nf > BRUTE_FORCE_FACE_LIMIT:
        raise TooLargeError(f"{nf} faces exceeds the enumeration bound {BRUTE_FORCE_FACE_LIMIT}")
    boundary = []
    for f in diagram.faces:
        bits = 0
        for k in f.boundary_crossings:
            bits |= 1 << k
        boundary.append(bits)

    best: tuple[int, tuple[int, ...]] | None = None
    flipped = 0
    chosen = 0
    if flipped == target:
        best = (0, ())
    for step in range(1, 1 << nf):
        face = (step & -step).bit_length() - 1
        flipped ^= boundary[face]
        chosen ^= 1 << face
        if flipped == target:
            ids = tuple(
                i for i in range(nf) if (chosen >> i) & 1
            )
            key = (len(ids), ids)
            if best is None or key < best:
                best = key
    if best is None:
        return None
    return frozenset(best[1])

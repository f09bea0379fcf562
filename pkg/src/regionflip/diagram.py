"""Combinatorial planar maps of link diagrams.

A diagram is stored as one record per crossing: the four arc labels in
counterclockwise rotation order anchored at the incoming under-strand end,
plus a flag saying whether the over strand enters at rotation slot 1
(positive crossing) or slot 3 (negative crossing).  Everything else (faces,
components, checkerboard coloring, linking numbers) is derived from that
rotation system when the diagram is assembled, and every operation returns a
freshly assembled immutable value.

Conventions fixed here and relied on throughout the package:

* rotation slots: 0 = under_in, 2 = under_out; over strand on slots 1 and 3;
* faces are traced keeping the face on the left: arrive at slot p, leave at
  slot (p - 1) mod 4;
* quadrant q at a crossing is the corner between rotation slots q and q+1;
* a crossing is positive when the over strand leaves 90 degrees
  counterclockwise from the incoming under strand, i.e. when its written
  order is (under_in, over_in, under_out, over_out).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import codec
from .codec import OrientedPDCode, Quad
from .errors import LabelError, NonPlanarError, SelfCrossingError, SplitError

BLACK = 0
WHITE = 1

ArcEnd = tuple[int, int]  # (crossing id, rotation slot)


@dataclass(frozen=True)
class Crossing:
    quad: Quad
    over_in_first: bool

    @property
    def sign(self) -> int:
        return 1 if self.over_in_first else -1

    @property
    def under_in(self) -> int:
        return self.quad[0]

    @property
    def under_out(self) -> int:
        return self.quad[2]

    @property
    def over_in(self) -> int:
        return self.quad[1] if self.over_in_first else self.quad[3]

    @property
    def over_out(self) -> int:
        return self.quad[3] if self.over_in_first else self.quad[1]

    def slot_is_head(self, slot: int) -> bool:
        if slot == 0:
            return True
        if slot == 2:
            return False
        if slot == 1:
            return self.over_in_first
        return not self.over_in_first


@dataclass(frozen=True)
class Region:
    """One face of the diagram's planar complement."""

    id: int
    corners: tuple[tuple[int, int], ...]  # (crossing, quadrant) in boundary order
    boundary_crossings: frozenset[int]


@dataclass(frozen=True)
class LinkingMatrix:
    """Pairwise linking numbers; diagonal entries are unused zeros."""

    values: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.values)

    def value(self, i: int, j: int) -> int:
        return self.values[i][j]

    def total_parities(self) -> tuple[int, ...]:
        n = self.size
        return tuple(
            sum(self.values[i][j] for j in range(n) if j != i) % 2 for i in range(n)
        )

    def mod2(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(v % 2 for v in row) for row in self.values)


class Diagram:
    """Immutable link diagram; assembled and validated from its crossings."""

    __slots__ = (
        "crossings", "crossing_count", "arc_labels", "head_end", "tail_end",
        "faces", "dart_face", "corner_face", "components", "component_of_arc",
        "colors_from_zero", "linking", "_arc_successor", "_arc_predecessor",
    )

    def __init__(self, crossings: tuple[Crossing, ...]):
        self.crossings = tuple(crossings)
        self.crossing_count = len(self.crossings)
        self._assemble()

    # -- construction ------------------------------------------------------

    def _assemble(self) -> None:
        c = self.crossing_count
        if c == 0:
            self.arc_labels = ()
            self.head_end = {}
            self.tail_end = {}
            self.faces = (
                Region(0, (), frozenset()),
                Region(1, (), frozenset()),
            )
            self.dart_face = {}
            self.corner_face = {}
            self.components = ((),)
            self.component_of_arc = {}
            self.colors_from_zero = (BLACK, WHITE)
            self.linking = LinkingMatrix(((0,),))
            self._arc_successor = {}
            self._arc_predecessor = {}
            return

        head_end: dict[int, ArcEnd] = {}
        tail_end: dict[int, ArcEnd] = {}
        for k, cr in enumerate(self.crossings):
            for s, lab in enumerate(cr.quad):
                target = head_end if cr.slot_is_head(s) else tail_end
                if lab in target:
                    raise LabelError(f"arc {lab} has two {'heads' if target is head_end else 'tails'}")
                target[lab] = (k, s)
        labels = tuple(sorted(head_end))
        if labels != tuple(range(1, 2 * c + 1)) or sorted(tail_end) != list(labels):
            raise LabelError("arc labels must be exactly 1..2c with one head and one tail each")
        self.arc_labels = labels
        self.head_end = head_end
        self.tail_end = tail_end

        self._check_connected()
        self._trace_faces()
        if len(self.faces) != c + 2:
            raise NonPlanarError(
                f"rotation system closes up with {len(self.faces)} faces, expected {c + 2}"
            )
        self._find_components()
        self._two_color_faces()
        self._compute_linking()

    def _check_connected(self) -> None:
        c = self.crossing_count
        adj: list[list[int]] = [[] for _ in range(c)]
        for lab in self.arc_labels:
            a, _ = self.tail_end[lab]
            b, _ = self.head_end[lab]
            adj[a].append(b)
            adj[b].append(a)
        seen = [False] * c
        stack = [0]
        seen[0] = True
        while stack:
            k = stack.pop()
            for m in adj[k]:
                if not seen[m]:
                    seen[m] = True
                    stack.append(m)
        if not all(seen):
            raise SplitError("underlying 4-valent graph is disconnected")

    def _trace_faces(self) -> None:
        # dart = (arc label, forward); forward darts run tail -> head
        arrive: dict[tuple[int, bool], ArcEnd] = {}
        depart: dict[ArcEnd, tuple[int, bool]] = {}
        for lab in self.arc_labels:
            arrive[(lab, True)] = self.head_end[lab]
            arrive[(lab, False)] = self.tail_end[lab]
            depart[self.tail_end[lab]] = (lab, True)
            depart[self.head_end[lab]] = (lab, False)

        faces: list[Region] = []
        dart_face: dict[tuple[int, bool], int] = {}
        corner_face: dict[tuple[int, int], int] = {}
        for lab in self.arc_labels:
            for fwd in (True, False):
                start = (lab, fwd)
                if start in dart_face:
                    continue
                fid = len(faces)
                corners: list[tuple[int, int]] = []
                d = start
                while d not in dart_face:
                    dart_face[d] = fid
                    k, p = arrive[d]
                    q = (p - 1) % 4
                    corners.append((k, q))
                    if (k, q) in corner_face:
                        raise NonPlanarError("corner visited by two faces")
                    corner_face[(k, q)] = fid
                    d = depart[(k, q)]
                faces.append(
                    Region(fid, tuple(corners), frozenset(k for k, _ in corners))
                )
        assert len(corner_face) == 4 * self.crossing_count
        self.faces = tuple(faces)
        self.dart_face = dart_face
        self.corner_face = corner_face

    def _find_components(self) -> None:
        succ: dict[int, int] = {}
        for lab in self.arc_labels:
            k, s = self.head_end[lab]
            cr = self.crossings[k]
            succ[lab] = cr.under_out if s == 0 else cr.over_out
        pred = {b: a for a, b in succ.items()}
        comps: list[tuple[int, ...]] = []
        comp_of: dict[int, int] = {}
        for lab in self.arc_labels:
            if lab in comp_of:
                continue
            cid = len(comps)
            circuit = []
            a = lab
            while a not in comp_of:
                comp_of[a] = cid
                circuit.append(a)
                a = succ[a]
            comps.append(tuple(circuit))
        self.components = tuple(comps)
        self.component_of_arc = comp_of
        self._arc_successor = succ
        self._arc_predecessor = pred

    def _two_color_faces(self) -> None:
        nf = len(self.faces)
        colors: list[int | None] = [None] * nf
        colors[0] = BLACK
        stack = [0]
        adj: list[set[int]] = [set() for _ in range(nf)]
        for lab in self.arc_labels:
            f1 = self.dart_face[(lab, True)]
            f2 = self.dart_face[(lab, False)]
            adj[f1].add(f2)
            adj[f2].add(f1)
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if colors[g] is None:
                    colors[g] = 1 - colors[f]  # type: ignore[operator]
                    stack.append(g)
                elif colors[g] == colors[f]:
                    raise NonPlanarError("faces admit no checkerboard coloring")
        assert all(col is not None for col in colors)
        self.colors_from_zero = tuple(colors)  # type: ignore[arg-type]

    def _compute_linking(self) -> None:
        n = len(self.components)
        sums = [[0] * n for _ in range(n)]
        for cr in self.crossings:
            i = self.component_of_arc[cr.under_in]
            j = self.component_of_arc[cr.over_in]
            if i != j:
                sums[i][j] += cr.sign
                sums[j][i] += cr.sign
        for i in range(n):
            for j in range(n):
                assert sums[i][j] % 2 == 0
                sums[i][j] //= 2
        self.linking = LinkingMatrix(tuple(tuple(row) for row in sums))

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Diagram) and self.crossings == other.crossings

    def __hash__(self) -> int:
        return hash(self.crossings)

    def __repr__(self) -> str:
        return f"Diagram(c={self.crossing_count}, n={len(self.components)}, faces={len(self.faces)})"

    # -- queries -----------------------------------------------------------

    @property
    def component_count(self) -> int:
        return len(self.components)

    def sign(self, crossing: int) -> int:
        return self.crossings[crossing].sign

    def writhe(self) -> int:
        return sum(cr.sign for cr in self.crossings)

    def arc_sides(self, lab: int) -> tuple[int, int]:
        """Face ids on the two sides of an arc."""
        return self.dart_face[(lab, True)], self.dart_face[(lab, False)]

    def to_code(self) -> OrientedPDCode:
        return OrientedPDCode(tuple(cr.quad for cr in self.crossings))


# -- module-level operations (the public surface) ---------------------------


def build_diagram(code: OrientedPDCode) -> Diagram:
    """Assemble and validate the planar map described by a code."""
    quads = code.crossings
    if not quads:
        return Diagram(())
    bits = codec.infer_over_directions(quads)
    return Diagram(tuple(Crossing(q, b) for q, b in zip(quads, bits)))


def crossing_sign(diagram: Diagram, crossing: int) -> int:
    return diagram.crossings[crossing].sign


def linking_matrix(diagram: Diagram) -> LinkingMatrix:
    return diagram.linking


def is_proper(diagram: Diagram) -> bool:
    """True when every component has even total linking with the rest."""
    return all(p == 0 for p in diagram.linking.total_parities())


def checkerboard(diagram: Diagram, white_face: int) -> tuple[int, ...]:
    """The unique checkerboard coloring with the given face white."""
    base = diagram.colors_from_zero
    if base[white_face] == WHITE:
        return base
    return tuple(1 - col for col in base)


def flip_crossings(diagram: Diagram, selection: frozenset[int] | set[int]) -> Diagram:
    """Swap over/under at each selected crossing; the map itself is unchanged."""
    sel = set(selection)
    bad = [k for k in sel if not (0 <= k < diagram.crossing_count)]
    if bad:
        raise ValueError(f"crossing ids out of range: {sorted(bad)}")
    new: list[Crossing] = []
    for k, cr in enumerate(diagram.crossings):
        if k not in sel:
            new.append(cr)
            continue
        a, b, c, d = cr.quad
        if cr.over_in_first:
            # new under strand enters at old slot 1
            new.append(Crossing((b, c, d, a), False))
        else:
            new.append(Crossing((d, a, b, c), True))
    return Diagram(tuple(new))


def mirror_diagram(diagram: Diagram) -> Diagram:
    """Reflect the diagram: rotation orders reverse, every sign negates."""
    new = tuple(
        Crossing((cr.quad[0], cr.quad[3], cr.quad[2], cr.quad[1]), not cr.over_in_first)
        for cr in diagram.crossings
    )
    return Diagram(new)


def smooth_crossing(diagram: Diagram, crossing: int) -> Diagram:
    """Replace an inter-component crossing by the orientation-respecting smoothing.

    The incoming under arc continues into the outgoing over arc and the
    incoming over arc into the outgoing under arc, merging two components.
    """
    cr = diagram.crossings[crossing]
    if diagram.component_of_arc[cr.under_in] == diagram.component_of_arc[cr.over_in]:
        raise SelfCrossingError(
            f"crossing {crossing} joins component "
            f"{diagram.component_of_arc[cr.under_in]} to itself"
        )
    joins = {cr.under_in: cr.over_out, cr.over_in: cr.under_out}
    merged_from = set(joins) | set(joins.values())
    # Chains A -> B [-> D] of arcs glued at the smoothed site.
    groups: list[list[int]] = []
    starts = [a for a in joins if a not in joins.values()]
    for a in sorted(starts):
        chain = [a]
        while chain[-1] in joins:
            chain.append(joins[chain[-1]])
        groups.append(chain)
    assert sum(len(g) for g in groups) == len(merged_from)

    rep: dict[int, int] = {}
    for chain in groups:
        for a in chain:
            rep[a] = min(chain)
    for lab in diagram.arc_labels:
        rep.setdefault(lab, lab)
    old_sorted = sorted(set(rep.values()))
    relabel = {old: i + 1 for i, old in enumerate(old_sorted)}

    new: list[Crossing] = []
    for k, other in enumerate(diagram.crossings):
        if k == crossing:
            continue
        quad = tuple(relabel[rep[lab]] for lab in other.quad)
        new.append(Crossing(quad, other.over_in_first))  # type: ignore[arg-type]
    result = Diagram(tuple(new))
    assert result.component_count == diagram.component_count - 1
    return result

"""Programmatic diagram constructions: braid closures and curl insertion.

Braid closures supply the bundled catalog and most test instances; curl
insertion adds nugatory crossings, which exercise the binary-incidence rule
for region boundaries.
"""

from __future__ import annotations

from typing import Sequence

from .diagram import Crossing, Diagram


def braid_closure(word: Sequence[int], strands: int) -> Diagram:
    """Close the braid given by ``word`` on ``strands`` strands.

    Letters are nonzero integers; letter ``+i`` crosses strand positions
    ``i`` and ``i+1`` with the strand arriving from position ``i+1`` on top,
    ``-i`` with the strand from position ``i`` on top.  Every generator index
    must appear, otherwise the closure is a split diagram.
    """
    if strands < 2:
        raise ValueError("a braid needs at least 2 strands")
    used = {abs(letter) for letter in word}
    if any(not (1 <= g < strands) for g in used):
        raise ValueError("letter index out of range")
    if used != set(range(1, strands)):
        raise ValueError("every generator must appear or the closure splits")

    # Arc bookkeeping: allocate provisional ids; the closure identifies the
    # final arc at each position with the initial one.
    next_id = 0

    def fresh() -> int:
        nonlocal next_id
        next_id += 1
        return next_id

    initial = [fresh() for _ in range(strands)]
    current = list(initial)
    quads: list[tuple[int, int, int, int]] = []
    bits: list[bool] = []
    for letter in word:
        i = abs(letter) - 1  # 0-based left position
        in_left, in_right = current[i], current[i + 1]
        out_left, out_right = fresh(), fresh()
        if letter > 0:
            # under strand runs lower-left to upper-right
            quads.append((in_left, in_right, out_right, out_left))
            bits.append(True)
        else:
            quads.append((in_right, out_right, out_left, in_left))
            bits.append(False)
        current[i], current[i + 1] = out_left, out_right

    alias = {current[p]: initial[p] for p in range(strands)}

    def resolve(a: int) -> int:
        while a in alias:
            a = alias[a]
        return a

    resolved = [tuple(resolve(a) for a in q) for q in quads]
    order: list[int] = []
    seen = set()
    for q in resolved:
        for a in q:
            if a not in seen:
                seen.add(a)
                order.append(a)
    relabel = {a: i + 1 for i, a in enumerate(order)}
    crossings = tuple(
        Crossing(tuple(relabel[a] for a in q), bit)  # type: ignore[arg-type]
        for q, bit in zip(resolved, bits)
    )
    return Diagram(crossings)


def add_curl(diagram: Diagram, arc: int, *, first_pass_under: bool, positive: bool) -> Diagram:
    """Insert a one-crossing curl on ``arc``.

    The strand now passes a new crossing twice; ``first_pass_under`` says the
    incoming pass goes under, ``positive`` fixes the new crossing's chirality.
    Existing labels are kept; the continuation and loop arcs get 2c+1, 2c+2.
    """
    if arc not in diagram.head_end:
        raise ValueError(f"no arc labeled {arc}")
    a_in = arc
    a_out = 2 * diagram.crossing_count + 1
    loop = 2 * diagram.crossing_count + 2
    if first_pass_under:
        quad = (a_in, loop, loop, a_out) if positive else (a_in, a_out, loop, loop)
    else:
        quad = (loop, a_in, a_out, loop) if positive else (loop, loop, a_out, a_in)
    k, s = diagram.head_end[arc]
    new_quads: list[tuple[tuple[int, int, int, int], bool]] = []
    for idx, cr in enumerate(diagram.crossings):
        if idx == k:
            q = list(cr.quad)
            q[s] = a_out  # the former head of `arc` now receives the continuation
            new_quads.append((tuple(q), cr.over_in_first))  # type: ignore[arg-type]
        else:
            new_quads.append((cr.quad, cr.over_in_first))
    new_quads.append((quad, positive))
    return Diagram(tuple(Crossing(q, bit) for q, bit in new_quads))


# Braid words for the bundled diagrams.
NAMED_BRAIDS: dict[str, tuple[tuple[int, ...], int]] = {
    "trefoil": ((1, 1, 1), 2),
    "figure_eight": ((1, -2, 1, -2), 3),
    "hopf": ((1, 1), 2),
    "torus_2_4": ((1, 1, 1, 1), 2),
    "torus_2_6": ((1, 1, 1, 1, 1, 1), 2),
    "whitehead": ((1, -2, 1, -2, 1), 3),
    "borromean": ((1, -2, 1, -2, 1, -2), 3),
    "torus_3_3": ((1, 2, 1, 2, 1, 2), 3),
}

# The 2x2 pass tangle: two parallel strands crossing two parallel strands,
# all four crossings with the same family on top; its diamond-shaped central
# region is the region changed by a pass move.
PASS_TANGLE_WORD: tuple[tuple[int, ...], int] = ((2, 1, 3, 2), 4)


def pass_tangle_closure() -> Diagram:
    word, strands = PASS_TANGLE_WORD
    return braid_closure(word, strands)


def pass_tangle_center(diagram: Diagram) -> int:
    """The face bounded by all four crossings of the pass tangle."""
    for f in diagram.faces:
        if f.boundary_crossings == frozenset(range(4)):
            return f.id
    raise ValueError("no face touches all four crossings")

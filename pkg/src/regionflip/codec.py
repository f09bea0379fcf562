"""Parsing, validation, and serialization of oriented PD codes and catalog files.

The native grammar is a sequence of terms ``X(a,b,c,d)``, optionally wrapped in
``PD[ ... ]``, with whitespace and commas as separators.  Each term lists the
four arc ends around one crossing in counterclockwise rotation order, starting
at the incoming under-strand end; the outgoing under-strand end therefore sits
in the third slot.  The second and fourth slots carry the over-strand, whose
direction is pinned down by the global rule that every arc label is the head
of exactly one slot and the tail of exactly one slot.  A positive crossing is
one whose written order is (under_in, over_in, under_out, over_out).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import IO, Iterable

from .errors import DegenerateError, LabelError, PDSyntaxError

Quad = tuple[int, int, int, int]

_TERM_RE = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_SEP_RE = re.compile(r"[\s,]*")


@dataclass(frozen=True)
class OrientedPDCode:
    """A validated diagram code: one rotation quadruple per crossing."""

    crossings: tuple[Quad, ...]

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


def _validate_quads(quads: tuple[Quad, ...]) -> None:
    c = len(quads)
    for idx, q in enumerate(quads):
        if q[0] == q[2]:
            raise DegenerateError(
                f"crossing {idx}: under strand enters and leaves as the same arc {q[0]}"
            )
        if q[1] == q[3]:
            raise DegenerateError(
                f"crossing {idx}: over strand enters and leaves as the same arc {q[1]}"
            )
    counts: dict[int, int] = {}
    for q in quads:
        for lab in q:
            counts[lab] = counts.get(lab, 0) + 1
    expected = set(range(1, 2 * c + 1))
    if set(counts) != expected or any(v != 2 for v in counts.values()):
        raise LabelError(
            f"arc labels must be exactly 1..{2 * c}, each appearing twice; got "
            f"{sorted((lab, n) for lab, n in counts.items() if lab not in expected or n != 2)}"
        )
    # Raises LabelError when no head/tail assignment exists.
    infer_over_directions(quads)


def make_code(quads: Iterable[Quad]) -> OrientedPDCode:
    """Build a validated code from rotation quadruples."""
    tup = tuple(tuple(int(x) for x in q) for q in quads)
    for q in tup:
        if len(q) != 4:
            raise PDSyntaxError("each crossing needs exactly four arc labels")
    _validate_quads(tup)  # type: ignore[arg-type]
    return OrientedPDCode(tup)  # type: ignore[arg-type]


def infer_over_directions(quads: tuple[Quad, ...]) -> tuple[bool, ...]:
    """Decide, per crossing, whether the over strand enters at slot 1.

    Slot 0 is always a head (an arc arrives) and slot 2 always a tail.  The
    over slots 1 and 3 hold one head and one tail; which is which follows from
    the requirement that every label has exactly one head and one tail.  Over
    strands that never pass under anything leave a free choice per closed
    chain; those are oriented so that the lowest-numbered crossing involved
    gets its over strand entering at slot 1.
    """
    c = len(quads)
    occ: dict[int, list[tuple[int, int]]] = {}
    for k, q in enumerate(quads):
        for s, lab in enumerate(q):
            occ.setdefault(lab, []).append((k, s))

    over_first: list[bool | None] = [None] * c
    # is_head per over slot given the crossing bit: slot1 head iff bit, slot3 head iff not bit
    slot_head: dict[tuple[int, int], bool] = {}
    for k, q in enumerate(quads):
        slot_head[(k, 0)] = True
        slot_head[(k, 2)] = False

    def head_count_conflict(lab: int) -> LabelError:
        return LabelError(f"arc label {lab} is not the head of exactly one slot")

    def set_bit(k: int, value: bool) -> list[tuple[int, int]]:
        if over_first[k] is not None:
            if over_first[k] != value:
                raise LabelError(
                    f"crossing {k}: over-strand direction is forced both ways"
                )
            return []
        over_first[k] = value
        slot_head[(k, 1)] = value
        slot_head[(k, 3)] = not value
        return [(k, 1), (k, 3)]

    def propagate(seeds: list[tuple[int, int]]) -> None:
        queue = list(seeds)
        while queue:
            k, s = queue.pop()
            lab = quads[k][s]
            here = slot_head[(k, s)]
            o1, o2 = occ[lab]
            other = o2 if (k, s) == o1 else o1
            ok, os_ = other
            want = not here  # the other occurrence carries the opposite role
            if (ok, os_) in slot_head:
                if slot_head[(ok, os_)] != want:
                    raise head_count_conflict(lab)
                continue
            # other occurrence is an undetermined over slot
            queue.extend(set_bit(ok, want if os_ == 1 else not want))

    # Seed from the positionally fixed under slots.
    propagate([(k, 0) for k in range(c)] + [(k, 2) for k in range(c)])
    # Remaining crossings form closed all-over chains; orient canonically.
    for k in range(c):
        if over_first[k] is None:
            propagate(set_bit(k, True))
    assert all(b is not None for b in over_first)
    return tuple(bool(b) for b in over_first)


def parse_pd(text: str) -> OrientedPDCode:
    """Parse one diagram record in the native grammar.

    The empty record (possibly written ``PD[]``) is the 0-crossing unknot.
    """
    s = text.strip()
    if s.startswith("PD["):
        if not s.endswith("]"):
            raise PDSyntaxError("unterminated PD[ ... ] wrapper", len(text) - 1)
        s = s[3:-1]
    quads: list[Quad] = []
    pos = 0
    n = len(s)
    while True:
        pos = _SEP_RE.match(s, pos).end()  # type: ignore[union-attr]
        if pos >= n:
            break
        m = _TERM_RE.match(s, pos)
        if m is None:
            raise PDSyntaxError(f"expected X(a,b,c,d), found {s[pos:pos + 12]!r}", pos)
        quads.append(tuple(int(g) for g in m.groups()))  # type: ignore[arg-type]
        pos = m.end()
    tup = tuple(quads)
    _validate_quads(tup)
    return OrientedPDCode(tup)


def serialize_pd(code: OrientedPDCode) -> str:
    """Canonical single-line form: terms joined by single spaces."""
    return " ".join(f"X({a},{b},{c},{d})" for a, b, c, d in code.crossings)


@dataclass(frozen=True)
class CatalogDiagnostic:
    line: int
    message: str


@dataclass(frozen=True)
class CatalogLoad:
    entries: tuple[tuple[str, OrientedPDCode], ...]
    diagnostics: tuple[CatalogDiagnostic, ...]


def load_catalog(stream: IO) -> CatalogLoad:
    """Read a newline-delimited catalog of ``{"name": ..., "pd": ...}`` records.

    Malformed lines are reported with their line number; valid lines are still
    returned in input order.
    """
    entries: list[tuple[str, OrientedPDCode]] = []
    diagnostics: list[CatalogDiagnostic] = []
    for lineno, raw in enumerate(stream, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
            if not isinstance(obj, dict) or not isinstance(obj.get("name"), str) \
                    or not isinstance(obj.get("pd"), str):
                raise ValueError('record must be {"name": <string>, "pd": <string>}')
            entries.append((obj["name"], parse_pd(obj["pd"])))
        except Exception as exc:  # collected, not fatal
            diagnostics.append(CatalogDiagnostic(lineno, str(exc)))
    return CatalogLoad(tuple(entries), tuple(diagnostics))

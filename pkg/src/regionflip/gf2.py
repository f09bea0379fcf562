"""Dense linear algebra over the two-element field.

Rows are packed into Python integers (bit i = column i), so row operations
are single XORs.  Pivoting always takes the lowest set bit, which keeps
particular solutions reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        mask = (1 << self.ncols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the declared column range")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row_combination(self, mask: int) -> int:
        """XOR of the rows selected by the bits of ``mask``."""
        acc = 0
        m = mask
        while m:
            low = m & -m
            acc ^= self.rows[low.bit_length() - 1]
            m ^= low
        return acc

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.ncols):
            v = 0
            for i, r in enumerate(self.rows):
                v |= ((r >> j) & 1) << i
            cols.append(v)
        return BitMatrix(tuple(cols), self.nrows)


def _eliminate(rows: tuple[int, ...]) -> tuple[list[tuple[int, int, int]], list[int]]:
    """Online Gaussian elimination.

    Returns (pivots, null_masks): pivots are (pivot column, reduced vector,
    row-combination mask), null_masks are row combinations that XOR to zero.
    """
    pivots: list[tuple[int, int, int]] = []
    null_masks: list[int] = []
    for i, row in enumerate(rows):
        v = row
        comb = 1 << i
        for col, pv, pm in pivots:
            if (v >> col) & 1:
                v ^= pv
                comb ^= pm
        if v:
            low = v & -v
            pivots.append((low.bit_length() - 1, v, comb))
        else:
            null_masks.append(comb)
    return pivots, null_masks


def rank(matrix: BitMatrix) -> int:
    pivots, _ = _eliminate(matrix.rows)
    return len(pivots)


def solve(matrix: BitMatrix, target: int) -> tuple[int, tuple[int, ...]] | None:
    """Express ``target`` as an XOR of rows of ``matrix``.

    Returns ``(particular, nullspace_basis)`` where both are row-selection
    masks, or ``None`` when the target is outside the row space.  The full
    solution set is the particular mask XOR any combination of basis masks.
    """
    if target < 0 or (matrix.ncols < target.bit_length()):
        raise ValueError("target has bits outside the column range")
    pivots, null_masks = _eliminate(matrix.rows)
    v = target
    comb = 0
    for col, pv, pm in pivots:
        if (v >> col) & 1:
            v ^= pv
            comb ^= pm
    if v:
        return None
    return comb, tuple(null_masks)

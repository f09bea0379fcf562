"""Walkthrough: turning proper links into trivial ones via region changes.

Run with: python demos/03_unknotting.py
"""

from regionflip import (
    NotProperError,
    bundled_diagrams,
    descending_selection,
    flip_crossings,
    is_descending,
    is_proper,
    linking_matrix,
    unknot_regions,
)

catalog = bundled_diagrams()

print("=" * 64)
print("A diagram is descending when, walking its components in order from")
print("base points, every crossing is first met on top; such diagrams are")
print("trivial.  Flipping the first-met-under crossings descends any")
print("diagram, and for proper links that set is always region-realizable.")
print("=" * 64)

for name in ("trefoil", "figure_eight", "borromean", "torus_3_3"):
    d = catalog[name]
    q = descending_selection(d)
    regions = unknot_regions(d)
    flip_set = set()
    for r in regions:
        flip_set ^= d.faces[r].boundary_crossings
    trivial = is_descending(flip_crossings(d, flip_set))
    print(f"\n{name}: defect crossings {sorted(q)}")
    print(f"  regions to flip: {sorted(regions)}")
    print(f"  minimal regions: {sorted(unknot_regions(d, minimal=True))}")
    print(f"  descending after the flips? {trivial}")

print("\nNon-proper links are refused, and no base choice can help:")
for name in ("hopf", "torus_2_6"):
    d = catalog[name]
    lk = linking_matrix(d)
    print(f"\n{name}: proper? {is_proper(d)} "
          f"(linking parities {list(lk.total_parities())})")
    try:
        unknot_regions(d)
    except NotProperError as exc:
        print(f"  refused: {exc}")

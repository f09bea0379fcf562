"""Walkthrough: which crossing selections can region changes realize?

Run with: python demos/02_region_solving.py
"""

from regionflip import (
    admissible_by_parity,
    brute_force_regions,
    bundled_diagrams,
    gf2,
    incidence_matrix,
    minimal_regions,
    solve_regions,
)

catalog = bundled_diagrams()
hopf = catalog["hopf"]

print("=" * 64)
print("Flipping every crossing on one face's boundary is a region")
print("crossing change; a crossing set is realizable exactly when it is")
print("an XOR of face rows of the incidence matrix.")
print("=" * 64)

inc = incidence_matrix(hopf)
print("\nClasp incidence matrix (rows = faces, cols = crossings):")
for face, row in zip(inc.row_faces, inc.matrix.rows):
    bits = "".join(str((row >> j) & 1) for j in range(inc.matrix.ncols))
    print(f"  face {face}: {bits}")
print(f"rank = {gf2.rank(inc.matrix)} = crossings - components + 1")

print("\nTarget {0}: ", solve_regions(hopf, frozenset({0})))
print("Target {0,1}:", sorted(solve_regions(hopf, frozenset({0, 1}))))
print("Minimal for {0,1}:", sorted(minimal_regions(hopf, frozenset({0, 1}))))

print("\nThe exhaustive oracle tries all region subsets and agrees:")
print("  brute force {0}:  ", brute_force_regions(hopf, frozenset({0})))
print("  brute force {0,1}:", sorted(brute_force_regions(hopf, frozenset({0, 1}))))

print("\nThe fast test never touches linear algebra: a selection works")
print("exactly when every component meets it an even number of times.")
borromean = catalog["borromean"]
for q in (frozenset({0}), frozenset({0, 1}), frozenset({0, 1, 2})):
    print(f"  borromean {sorted(q)}: parity says {admissible_by_parity(borromean, q)},"
          f" solver says {solve_regions(borromean, q) is not None}")

"""Walkthrough: diagram codes and the planar maps built from them.

Run with: python demos/01_codes_and_diagrams.py
"""

from regionflip import (
    build_diagram,
    checkerboard,
    crossing_sign,
    is_proper,
    linking_matrix,
    mirror_diagram,
    parse_pd,
    serialize_pd,
)

print("=" * 64)
print("A diagram code lists one X(a,b,c,d) term per crossing: the four")
print("arc ends counterclockwise, starting at the incoming under strand.")
print("=" * 64)

hopf = build_diagram(parse_pd("X(1,4,2,3) X(3,2,4,1)"))
print("\nThe standard 2-crossing clasp of two circles:")
print(f"  crossings = {hopf.crossing_count}")
print(f"  components = {hopf.component_count}")
print(f"  faces = {len(hopf.faces)}  (always crossings + 2 on the sphere)")
print(f"  linking number = {linking_matrix(hopf).value(0, 1)}")
print(f"  proper link? {is_proper(hopf)}  (odd linking: the obstruction)")

print("\nEvery face records which crossings sit on its boundary:")
for face in hopf.faces:
    print(f"  face {face.id}: boundary crossings {sorted(face.boundary_crossings)}")
print("Both crossings lie on every face; that is exactly why no set of")
print("region changes can flip just one of them.")

trefoil = build_diagram(parse_pd("X(1,2,3,4) X(4,3,5,6) X(6,5,2,1)"))
print("\nA trefoil: signs", [crossing_sign(trefoil, k) for k in range(3)])
mirror = mirror_diagram(trefoil)
print("Its mirror:   signs", [crossing_sign(mirror, k) for k in range(3)])
print("Mirror code:", serialize_pd(mirror.to_code()))

colors = checkerboard(trefoil, white_face=0)
print("\nCheckerboard coloring with face 0 white:", colors)
print("Faces split", sorted((colors.count(0), colors.count(1))), "between the colors.")

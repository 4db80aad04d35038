"""Signed orbit bases on an oriented surface.

Every context (v, w) has a family of admissible cover chains.  Swapping a
single position to its unique alternative is an involution; the orbits of
these swaps, summed with the orientation signs, give a basis of the
corresponding piece of the dual.

Run:  python tutorials/03_orbits.py
"""

from splitkoszul import builders, dual_algebra, oriented
from splitkoszul.graph_core import BOTTOM

g = builders.build_surface(builders.tetrahedron())
o = oriented.orient_surface(g)

# the six chains F0 > e > x over a single triangle
d = oriented.orbit_decomposition(g, "F0", BOTTOM, o)
for m in d.monomials:
    print(f"{o(m, BOTTOM):+d}  {' '.join(m)}")
print("orbits:", len(d.orbits), " kernel dim:", d.kernel_dim)

# swapping position 2 exchanges the two endpoints of the middle edge
m = d.monomials[0]
print(m, "->", oriented.conjugate(g, m, 2, BOTTOM))

# the signed orbit sum lies in the graded relations
print("in R^(3):", dual_algebra.membership(g, d.sums[0]))

# the top-level context: 24 chains M > F > e > x and still one orbit
top = oriented.orbit_decomposition(g, "M", BOTTOM, o)
print(len(top.monomials), "chains,", len(top.orbits), "orbit")

# full table as the command-line tool prints it
for row in oriented.orbit_table(g):
    print(row)

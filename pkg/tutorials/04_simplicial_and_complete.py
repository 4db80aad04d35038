"""Face posets of simplicial complexes and complete layered graphs.

Both families pass the kernel/image sufficient condition, and their dual
dimensions have closed forms that can be read off directly.

Run:  python tutorials/04_simplicial_and_complete.py
"""

from itertools import combinations

from splitkoszul import builders, dual_algebra, koszul
from splitkoszul.builders import SimplicialComplex

for name, delta in [("simplex 4", SimplicialComplex.simplex(4)),
                    ("boundary of simplex 4", SimplicialComplex.simplex_boundary(4)),
                    ("two triangles and an edge",
                     SimplicialComplex.from_faces([[1, 2, 3], [2, 3, 4], [4, 5]], warn=False))]:
    g = builders.build_simplicial(delta)
    print(name, "f-vector", g.meta["f_vector"])
    print("   dual     ", dual_algebra.dual_hilbert(g))
    print("   binomial ", dual_algebra.simplicial_dual_formula(delta))
    ok, _ = koszul.sufficient_condition_all(g)
    print("   sufficient condition everywhere:", ok)

# explicit dual elements S(A:B): alternating sums over orderings of B
A = frozenset({1, 2, 3})
g = builders.build_simplicial(SimplicialComplex.simplex(3))
for B in combinations(sorted(A), 2):
    vec = dual_algebra.simplicial_sab(A, B)
    print(B, vec, dual_algebra.membership(g, vec))

# complete layered graphs: every vertex covers the whole level below
for sizes in [(1, 2, 2), (1, 3, 2, 2), (1, 3, 3, 3), (1, 2, 2, 2, 2)]:
    g = builders.build_complete(sizes)
    rep = koszul.koszul_verdict(g)
    print(sizes, rep.dual_hilbert, rep.verdict.value)

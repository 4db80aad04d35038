"""A height-four graph whose splitting algebra fails to be Koszul.

Run:  python tutorials/01_counterexample.py
"""

from splitkoszul import builders, hilbert, koszul
from splitkoszul.dual_algebra import dual_component_dim

g = builders.build_cassidy_shelton()
print(g)  # 11 vertices on five levels

# signed chain counts, grouped by the levels where a chain starts and stops
s = hilbert.chain_sums(g)
for (a, b), val in sorted(s.items(), reverse=True):
    print(f"s[{a},{b}] = {val:3d}")

inv = hilbert.hilbert_inverse(g)
print("H(A,z)^-1 =", inv)
print("same by the Mobius route:", inv == hilbert.grw_inverse(g))

# H(A,z) itself has positive coefficients...
print("H(A,z)    =", list(hilbert.expand_series(inv, 7)))

# ...but H(A,-z)^-1 does not, so A cannot be Koszul
print("positivity screen:", koszul.positivity_screen(g))  # (False, 4)

# the dual has a single degree-3 element, sitting over the top vertex
for k in range(2, 5):
    print(f"dim R_u^({k}) =", dual_component_dim(g, "u", k))

ok, residual = koszul.numerical_koszul(g)
print("numerically Koszul:", ok, " residual:", residual)

# the kernel/image test breaks at (u, 2, 0): one relation on level 2 with nothing above it
sc = koszul.sufficient_condition(g, "u", 2, 0)
print(sc)

# and the degree-4 lattice is not distributive; the gap equals the first b coefficient
ld = koszul.lattice_dims(g, "u")
print("X1 cap (X2+X3):", ld.x1_cap_x2_x3_sum, " X1 cap X2 + X1 cap X3:", ld.intersections_sum)
print("b_4 =", koszul.b_coefficients(g, 4)[4])

"""
Digraphs of matrices, path-sum inversion, and circulants
========================================================

The digraph of a matrix has an edge i -> j exactly when a_ij != 0.  For the
bdsw pattern that digraph is a single n-cycle plus loops, so there is exactly
one simple path between any two vertices and each inverse entry collapses to
one product along that path.
"""

from fractions import Fraction

from zmx import (
    Matrix,
    bdsw_matrix,
    circulant_conditions,
    circulant_pz,
    classify,
    digraph_of,
    enumerate_paths,
    inverse,
    is_irreducible,
    is_unipathic,
    maybee_entry,
    shift_matrix,
    to_dot,
)

B = bdsw_matrix([-1, -1, 1], [-1, -1], -2)
print("B =")
print(B)

d = digraph_of(B)
print("edges:", sorted(d.edges))
print("irreducible:", is_irreducible(d), " unipathic:", is_unipathic(d))
print("simple paths 1 -> 3:", enumerate_paths(d, 1, 3))
print()
print(to_dot(d))

# Each off-diagonal inverse entry is a signed product over the unique path.
binv = inverse(B)
print("B^-1 =")
print(binv)
print("path-sum value at (3, 2):", maybee_entry(B, 3, 2))
print("matches the inverse:", maybee_entry(B, 3, 2) == binv.entry(3, 2))

# Path sums need no unipathicity; on a dense matrix they just sum over more
# paths and still reproduce the inverse.
D = Matrix([[1, -1, -1], [-2, 1, 1], [2, -2, -1]])
dd = digraph_of(D)
print("\ndense 3x3: paths 1 -> 3 =", enumerate_paths(dd, 1, 3))
print("all entries agree:",
      all(maybee_entry(D, i, j) == inverse(D).entry(i, j)
          for i in (1, 2, 3) for j in (1, 2, 3)))

# The cyclic shift generates the circulants: p(Z) with first row alpha.
Z = shift_matrix(4)
print("\nZ =")
print(Z)
C = circulant_pz([8, 4, 2, 1])
print("8*I + 4*Z + 2*Z^2 + Z^3 =")
print(C)

# Geometric first rows alpha_r = alpha_2^(r-1) / alpha_1^(r-2) are exactly
# the circulants whose inverse lands back in the bdsw world; the parameter
# test decides M or N without ever forming the inverse.
good = [2, 1, Fraction(1, 2), Fraction(1, 4)]
bad = [2, 1, Fraction(1, 2), Fraction(1, 5)]
show = lambda seq: " ".join(str(x) for x in seq)
print("\nalpha =", show(good), " passes:", circulant_conditions(good, "nonneg"))
print("alpha =", show(bad), " passes:", circulant_conditions(bad, "nonneg"))

G = circulant_pz(good)
rpt = classify(inverse(G))
print("inverse of the conforming circulant: Z:", rpt.is_z,
      " nonsingular M:", rpt.is_nonsingular_m)

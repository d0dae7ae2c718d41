"""
Cycle matrices and their bdsw inverses
======================================

A matrix with nonzero diagonal is inverse cyclic when every entry off the
diagonal, super-diagonal and (n,1) corner is the monomial those bands force.
Two numbers then control everything: d, the product of the diagonal, and c,
the cyclic product around the super-diagonal and the corner.
"""

from zmx import (
    Matrix,
    bdsw_sign_classify,
    cyclic_det,
    cyclic_inverse,
    cyclic_products,
    det,
    from_cyclic_params,
    inverse,
    is_bdsw,
    is_full,
    is_inverse_cyclic,
    roundtrip_check,
    run_verify,
)

A = Matrix([[1, -1, -1], [-2, 1, 1], [2, -2, -1]])
print("A =")
print(A)
print("inverse cyclic:", is_inverse_cyclic(A))

d, c = cyclic_products(A)
print("d =", d, " c =", c)
print("closed-form det (d-c)^(n-1)/d^(n-2) =", cyclic_det(A), "  direct det =", det(A))

B = cyclic_inverse(A)
print("closed-form inverse:")
print(B)
print("bdsw pattern:", is_bdsw(B))

# One entry breaks the relations and the bdsw inverse evaporates with it.
C = Matrix([[1, -1, -1], [-2, 1, 1], [2, 2, -1]])
print("\nC (one entry changed) inverse cyclic:", is_inverse_cyclic(C))
print("C^-1 bdsw:", is_bdsw(inverse(C)))
print("theorem probe still true on both:", roundtrip_check(A), roundtrip_check(C))

# Zeros in the super-diagonal or the corner are fine; fullness is what the
# structure theorem needs, not the property itself.
A4 = from_cyclic_params([2, 1, -2, 1], [-2, 2, 0], 2)
print("\n4x4 built from (diag, super, corner) parameters:")
print(A4)
print("full:", is_full(A4), " inverse cyclic:", is_inverse_cyclic(A4))
print("its inverse (not bdsw, the matrix is not full):")
print(inverse(A4))

# Sign story: positive with d > c inverts to a bdsw M-matrix, negative
# matrices need the right parity of d - c to invert to a bdsw N-matrix.
P = Matrix([[4, 4, 8, 4, 4], [1, 2, 4, 2, 2], [1, 1, 4, 2, 2],
            [2, 2, 4, 4, 4], [2, 2, 4, 2, 4]])
N = Matrix([[-2, -2, -4, -8], [-4, -1, -2, -4], [-2, -2, -1, -2], [-2, -2, -4, -2]])
W = Matrix([[-2, -2, -2, -2], [-1, -2, -2, -2], [-1, -1, -2, -2], [-1, -1, -1, -2]])
for name, m in (("P", P), ("N", N), ("W", W)):
    dd, cc = cyclic_products(m)
    print(f"{name}: d-c = {dd - cc}, verdict = {bdsw_sign_classify(m).value}")

# The same claims, replayed on seeded random draws.
summary = run_verify("cycle-matrix", 2, 6, 50, seed=0)
print("\nrandom replay of the structure theorem:",
      summary.checks, "checks,", len(summary.failures), "failures")

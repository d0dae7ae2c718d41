"""
Exact rational matrices: determinants, inverses, principal minors
==================================================================

Everything in zmx runs on fractions.Fraction, so every determinant and
inverse below is exact. No tolerance appears anywhere in this script.
"""

from fractions import Fraction

from zmx import (
    IndexSet,
    Matrix,
    complementary_minor_check,
    det,
    inverse,
    principal_minor,
    submatrix,
)

# A worked 3x3 with determinant -1. Entries can be ints, strings or
# Fractions; floats are rejected on purpose.
A = Matrix([[1, -1, -1], [-2, 1, 1], [2, -2, -1]])
print("A =")
print(A)
print("det A =", det(A))

B = inverse(A)
print("A^-1 =")
print(B)
print("A * A^-1 == I:", A * B == Matrix.identity(3))

# Rational entries cost nothing extra.
H = Matrix([[Fraction(1, i + j - 1) for j in range(1, 5)] for i in range(1, 5)])
print("\n4x4 Hilbert determinant:", det(H))
print("inverse entry (1,1):", inverse(H).entry(1, 1))

# Principal minors index by 1-based row/column sets.
S = IndexSet(3, (1, 3))
print("\nA[{1,3}] =")
print(submatrix(A, S, S))
print("principal minor on {1,3}:", principal_minor(A, (1, 3)))

# The complementary-minor identity ties minors of the inverse back to
# minors of the matrix itself; check_all sweeps a sample of index pairs.
alpha = IndexSet(3, (1, 2))
beta = IndexSet(3, (2, 3))
print("complementary minor identity on (alpha, beta):",
      complementary_minor_check(A, alpha, beta))

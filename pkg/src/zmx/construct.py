"""Constructors for the structured families the toolkit studies.

from_cyclic_params rebuilds a full inverse cyclic matrix from its free
parameters (diagonal, super-diagonal, corner); every remaining entry is the
monomial forced by the case-equations. bdsw_matrix lays out the sparse
pattern directly. type_d builds the constant-on-L-shapes family
a_ij = a_min(i,j) from a strictly increasing parameter list, whose inverse is
tridiagonal. circulant_pz evaluates a polynomial in the cyclic shift matrix,
giving a circulant; circulant_conditions tests the parameter conditions under
which its inverse is a bdsw M- or N-matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from zmx.matrix import Matrix, inverse
from zmx.zclass import ORDER_CAP, is_z, l_index


def _params(seq, name) -> list[Fraction]:
    out = []
    for x in seq:
        if isinstance(x, float):
            raise TypeError(f"{name} must be exact (int, str or Fraction)")
        out.append(Fraction(x))
    return out


def from_cyclic_params(diag: Sequence, sup: Sequence, corner) -> Matrix:
    """The inverse cyclic matrix with the given free parameters.

    diag must be nonzero throughout (length n >= 2), sup has length n-1 and
    may contain zeros, as may the corner. Entries off the three parameter
    positions are the monomials the case-equations force, so the result
    always satisfies is_inverse_cyclic.
    """
    d = _params(diag, "diag")
    s = _params(sup, "super")
    (corner,) = _params([corner], "corner")
    n = len(d)
    if n < 2:
        raise ValueError("need at least 2 diagonal parameters")
    if len(s) != n - 1:
        raise ValueError(f"expected {n - 1} super-diagonal parameters, got {len(s)}")
    if any(x == 0 for x in d):
        raise ValueError("diagonal parameters must be nonzero")
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = d[i]
    # upper triangle: chain of super-diagonal hops i -> i+1 -> ... -> j
    for i in range(n - 1):
        acc = Fraction(1)
        for j in range(i + 1, n):
            acc *= s[j - 1]
            if j > i + 1:
                acc /= d[j - 1]
            rows[i][j] = acc
    # lower triangle, i < n: ride the cycle out through n and back in via 1
    for i in range(1, n - 1):
        head = corner
        for t in range(i, n - 1):
            head *= s[t] / d[t + 1]
        acc = head
        rows[i][0] = acc
        for j in range(1, i):
            acc *= s[j - 1] / d[j - 1]
            rows[i][j] = acc
    # last row: corner, then chase along row 1
    acc = corner
    rows[n - 1][0] = acc
    for j in range(1, n - 1):
        acc *= s[j - 1] / d[j - 1]
        rows[n - 1][j] = acc
    return Matrix(rows)


def bdsw_matrix(diag: Sequence, sup: Sequence, corner) -> Matrix:
    """bdsw pattern: given diagonal, super-diagonal and (n,1) corner, zeros elsewhere.

    All parameters must be nonzero and n >= 2; at n = 2 the four cells are
    exactly the four entries of the matrix.
    """
    d = _params(diag, "diag")
    s = _params(sup, "super")
    (corner,) = _params([corner], "corner")
    n = len(d)
    if n < 2:
        raise ValueError("bdsw matrices need order >= 2")
    if len(s) != n - 1:
        raise ValueError(f"expected {n - 1} super-diagonal parameters, got {len(s)}")
    if any(x == 0 for x in d) or any(x == 0 for x in s) or corner == 0:
        raise ValueError("bdsw parameters must all be nonzero")
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = d[i]
    for i in range(n - 1):
        rows[i][i + 1] = s[i]
    rows[n - 1][0] = corner
    return Matrix(rows)


def type_d(a: Sequence) -> Matrix:
    """a_ij = a_min(i,j) for strictly increasing parameters a_1 < ... < a_n."""
    p = _params(a, "a")
    n = len(p)
    if n < 1:
        raise ValueError("need at least one parameter")
    for prev, cur in zip(p, p[1:]):
        if cur <= prev:
            raise ValueError("parameters must be strictly increasing")
    return Matrix([[p[min(i, j)] for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class TypeDVerification:
    tridiagonal: bool
    z: bool
    l_index_of_inverse: Optional[int]


def type_d_verify(a: Sequence, cap: int = ORDER_CAP) -> TypeDVerification:
    """Invert type_d(a) and report the structure of the inverse.

    Needs a_1 != 0 on top of strict increase (a_1 = 0 makes the matrix
    singular). The inverse of this family is tridiagonal and Z; the report
    carries its l_index, or None in the (unexpected) case the inverse is not Z.
    """
    p = _params(a, "a")
    if p and p[0] == 0:
        raise ValueError("a_1 must be nonzero, the matrix would be singular")
    m = type_d(p)
    inv = inverse(m)
    tri = is_tridiagonal(inv)
    z = is_z(inv)
    li = l_index(inv, cap) if z else None
    return TypeDVerification(tridiagonal=tri, z=z, l_index_of_inverse=li)


def shift_matrix(n: int) -> Matrix:
    """Cyclic shift: ones on the super-diagonal and in the (n,1) corner."""
    if n < 1:
        raise ValueError("order must be at least 1")
    one, zero = Fraction(1), Fraction(0)
    return Matrix._wrap(
        tuple(
            tuple(
                one if (j == i + 1 or (i == n - 1 and j == 0)) else zero
                for j in range(n)
            )
            for i in range(n)
        )
    )


def circulant_pz(alpha: Sequence) -> Matrix:
    """Evaluate alpha_1*I + alpha_2*Z + ... + alpha_n*Z^(n-1), Z the cyclic shift.

    The result is the circulant with first row (alpha_1, ..., alpha_n) and
    every following row rotated one place right.
    """
    coeffs = _params(alpha, "alpha")
    n = len(coeffs)
    if n < 1:
        raise ValueError("need at least one coefficient")
    acc = coeffs[0] * Matrix.identity(n)
    power = Matrix.identity(n)
    z = shift_matrix(n)
    for k in range(1, n):
        power = power * z
        if coeffs[k]:
            acc = acc + coeffs[k] * power
    return acc


def circulant_conditions(alpha: Sequence, mode: str) -> bool:
    """Parameter test for circulants whose inverse is a bdsw M- or N-matrix.

    mode "nonneg" (all alpha >= 0): requires alpha_1 > alpha_2 > 0 and the
    power relation alpha_r = alpha_2^(r-1) / alpha_1^(r-2) for r = 3..n.
    mode "nonpos" (all alpha <= 0): requires alpha_2 < alpha_1 < 0 and the
    same power relation. A parameter list violating the mode's sign
    restriction is a caller error, not a False result.
    """
    coeffs = _params(alpha, "alpha")
    n = len(coeffs)
    if n < 2:
        raise ValueError("need at least two coefficients")
    if mode == "nonneg":
        if any(x < 0 for x in coeffs):
            raise ValueError("sign violation: nonneg mode requires all coefficients >= 0")
        if not (coeffs[0] > coeffs[1] > 0):
            return False
    elif mode == "nonpos":
        if any(x > 0 for x in coeffs):
            raise ValueError("sign violation: nonpos mode requires all coefficients <= 0")
        if not (coeffs[1] < coeffs[0] < 0):
            return False
    else:
        raise ValueError(f"unknown mode {mode!r}, expected 'nonneg' or 'nonpos'")
    a1, a2 = coeffs[0], coeffs[1]
    for r in range(3, n + 1):
        if coeffs[r - 1] != a2 ** (r - 1) / a1 ** (r - 2):
            return False
    return True


def is_tridiagonal(a: Matrix) -> bool:
    """Zero outside the three central diagonals (band entries may be anything)."""
    rows = a.rows
    n = a.n
    return all(
        rows[i][j] == 0 for i in range(n) for j in range(n) if abs(i - j) > 1
    )

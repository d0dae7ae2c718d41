"""Z-matrix taxonomy decided by exact principal-minor signs.

A Z-matrix has nonpositive off-diagonal entries. Writing A = tI - B with B
nonnegative, the classes below are bands of t against the spectral radii of
B's principal submatrices, but every predicate here is decided without
eigenvalues: the band membership is equivalent to sign conditions on A's own
principal minors, which are exact over Fraction.

  nonsingular M  all 2^n - 1 principal minors > 0
  M (weak)       all principal minors >= 0
  N              n >= 2, minors of order < n all > 0, det < 0
  N0             minors of order < n all >= 0, det < 0
  F0             n >= 3, minors of order <= n-2 all >= 0, some
                 order-(n-1) minor < 0

l_index(A) = s locates the band: s = (minimal order of a negative principal
minor) - 1, or n when no minor is negative (s = n is M, s = n-1 is N0,
s = n-2 is F0). Minor enumeration is exponential, so these functions carry a
hard order cap; exceeding it raises OrderCapError. The perron_r bisection
pins the band thresholds themselves: the largest spectral radius over
order-r principal submatrices of a nonnegative B, to any requested rational
tolerance, using only the minor test "tI - Bhat is weakly M iff t >= rho(Bhat)".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional

from zmx.digraph import digraph_of, is_irreducible
from zmx.errors import NotZMatrixError, OrderCapError
from zmx.matrix import Matrix, _bareiss_det, _integer_grid, det

ORDER_CAP = 12


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise OrderCapError(
            f"order {n} exceeds the principal-minor enumeration cap {cap}"
        )


def is_z(a: Matrix) -> bool:
    """True when every off-diagonal entry is <= 0."""
    rows = a.rows
    n = a.n
    return all(rows[i][j] <= 0 for i in range(n) for j in range(n) if i != j)


@dataclass(frozen=True)
class ZRepresentation:
    """Split A = t*I - b of a Z-matrix, with b entrywise nonnegative."""

    t: Fraction
    b: Matrix


def z_decompose(a: Matrix, t) -> ZRepresentation:
    """Split the Z-matrix a as t*I - B with B >= 0 entrywise.

    Any t at least the maximal diagonal entry works; smaller t would force a
    negative diagonal in B and is rejected.
    """
    if not is_z(a):
        raise NotZMatrixError("matrix has a positive off-diagonal entry")
    if isinstance(t, float):
        raise TypeError("t must be exact (int, str or Fraction)")
    t = Fraction(t)
    max_diag = max(a.entry(i, i) for i in range(1, a.n + 1))
    if t < max_diag:
        raise ValueError(
            f"t = {t} is below the maximal diagonal entry {max_diag}; B would have a negative diagonal"
        )
    b = t * Matrix.identity(a.n) - a
    return ZRepresentation(t, b)


def _minor_signs(a: Matrix, max_order: Optional[int] = None) -> Iterator[tuple[int, int]]:
    """Yield (order, sign) for every principal minor, orders ascending.

    Signs are computed on the denominator-cleared integer matrix; scaling by
    a positive integer never changes a minor's sign.
    """
    n = a.n
    _, grid = _integer_grid(a.rows)
    top = n if max_order is None else min(max_order, n)
    for order in range(1, top + 1):
        if order == 1:
            for i in range(n):
                d = grid[i][i]
                yield 1, (d > 0) - (d < 0)
            continue
        for combo in combinations(range(n), order):
            sub = [[grid[r][c] for c in combo] for r in combo]
            d = _bareiss_det(sub)
            yield order, (d > 0) - (d < 0)


def is_nonsingular_m(a: Matrix, cap: int = ORDER_CAP) -> bool:
    """Z and every principal minor positive."""
    if not is_z(a):
        return False
    _check_cap(a.n, cap)
    return all(s > 0 for _, s in _minor_signs(a))


def is_m(a: Matrix, cap: int = ORDER_CAP) -> bool:
    """Z and every principal minor nonnegative (possibly singular M)."""
    if not is_z(a):
        return False
    _check_cap(a.n, cap)
    return all(s >= 0 for _, s in _minor_signs(a))


def is_n(a: Matrix, cap: int = ORDER_CAP) -> bool:
    """Z of order >= 2, proper principal minors all positive, det negative."""
    n = a.n
    if n < 2 or not is_z(a):
        return False
    _check_cap(n, cap)
    for order, s in _minor_signs(a):
        if order < n:
            if s <= 0:
                return False
        else:
            return s < 0
    raise AssertionError("unreachable")


def is_n0(a: Matrix, cap: int = ORDER_CAP) -> bool:
    """Z, proper principal minors all nonnegative, det negative."""
    if not is_z(a):
        return False
    n = a.n
    _check_cap(n, cap)
    for order, s in _minor_signs(a):
        if order < n:
            if s < 0:
                return False
        else:
            return s < 0
    raise AssertionError("unreachable")


def is_f0(a: Matrix, cap: int = ORDER_CAP) -> bool:
    """Z of order >= 3 whose order <= n-2 principal submatrices are all weakly
    M while some order-(n-1) principal submatrix is N0.

    Equivalently: minors of order <= n-2 all >= 0 and some order-(n-1) minor
    is negative. Returns False below order 3, where the class is not defined.
    """
    n = a.n
    if n < 3 or not is_z(a):
        return False
    _check_cap(n, cap)
    found_negative = False
    for order, s in _minor_signs(a, max_order=n - 1):
        if order <= n - 2:
            if s < 0:
                return False
        elif s < 0:
            found_negative = True
    return found_negative


def l_index(a: Matrix, cap: int = ORDER_CAP) -> int:
    """Band index s in 0..n for a Z-matrix.

    s = (minimal order of a negative principal minor) - 1, and s = n when no
    principal minor is negative. s = n means M, s = n-1 means N0, s = n-2
    means F0.
    """
    if not is_z(a):
        raise NotZMatrixError("l_index is defined for Z-matrices only")
    _check_cap(a.n, cap)
    for order, s in _minor_signs(a):
        if s < 0:
            return order - 1
    return a.n


@dataclass(frozen=True)
class ClassReport:
    n: int
    is_z: bool
    is_nonsingular: bool
    determinant: Fraction
    irreducible: bool
    is_m: bool
    is_nonsingular_m: bool
    is_n: bool
    is_n0: bool
    is_f0: bool
    l_index: Optional[int]


def classify(a: Matrix, cap: int = ORDER_CAP) -> ClassReport:
    """Full taxonomy report in one minor sweep.

    Non-Z input still gets determinant, nonsingularity and irreducibility;
    the class flags are False and l_index is None there.
    """
    d = det(a)
    irr = is_irreducible(digraph_of(a))
    n = a.n
    if not is_z(a):
        return ClassReport(n, False, d != 0, d, irr, False, False, False, False, False, None)
    _check_cap(n, cap)
    has_neg = [False] * (n + 1)
    has_zero = [False] * (n + 1)
    for order, s in _minor_signs(a):
        if s < 0:
            has_neg[order] = True
        elif s == 0:
            has_zero[order] = True
    min_neg = next((k for k in range(1, n + 1) if has_neg[k]), None)
    li = n if min_neg is None else min_neg - 1
    proper_nonneg = not any(has_neg[1:n])
    proper_pos = proper_nonneg and not any(has_zero[1:n])
    return ClassReport(
        n=n,
        is_z=True,
        is_nonsingular=d != 0,
        determinant=d,
        irreducible=irr,
        is_m=min_neg is None,
        is_nonsingular_m=min_neg is None and not any(has_zero),
        is_n=n >= 2 and proper_pos and d < 0,
        is_n0=proper_nonneg and d < 0,
        is_f0=n >= 3 and not any(has_neg[1 : n - 1]) and has_neg[n - 1],
        l_index=li,
    )


def _is_weak_m_shift(bhat: Matrix, t: Fraction) -> bool:
    # tI - bhat is a Z-matrix for any nonnegative bhat
    shifted = t * Matrix.identity(bhat.n) - bhat
    return all(s >= 0 for _, s in _minor_signs(shifted))


def _rho_bisect(bhat: Matrix, tol: Fraction) -> Fraction:
    """Spectral radius of the nonnegative matrix bhat, to within tol above.

    Uses the monotone exact test rho(bhat) <= t iff tI - bhat has all
    principal minors >= 0; brackets with [0, max row sum].
    """
    lo = Fraction(0)
    if _is_weak_m_shift(bhat, lo):
        return lo
    hi = max(sum(row) for row in bhat.rows)
    while hi - lo >= tol:
        mid = (lo + hi) / 2
        if _is_weak_m_shift(bhat, mid):
            hi = mid
        else:
            lo = mid
    return hi


def perron_r(b: Matrix, r: int, tol=Fraction(1, 10**9), cap: int = ORDER_CAP) -> Fraction:
    """Largest spectral radius over the order-r principal submatrices of b.

    b must be entrywise nonnegative and 1 <= r <= n. The returned rational v
    sits within tol above the true maximum: rho <= v < rho + tol, certified
    by minor signs alone, no eigenvalue computation.
    """
    n = b.n
    _check_cap(n, cap)
    if not (1 <= r <= n):
        raise ValueError(f"submatrix order r = {r} outside 1..{n}")
    if any(x < 0 for row in b.rows for x in row):
        raise ValueError("matrix must be entrywise nonnegative")
    if isinstance(tol, float):
        raise TypeError("tol must be exact (int, str or Fraction)")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    rows = b.rows
    best = Fraction(0)
    for combo in combinations(range(n), r):
        sub = Matrix._wrap(tuple(tuple(rows[i][j] for j in combo) for i in combo))
        v = _rho_bisect(sub, tol)
        if v > best:
            best = v
    return best

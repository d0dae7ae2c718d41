"""Exact rational matrices and the determinant machinery built on them.

Entries are fractions.Fraction throughout; floating point is rejected at the
door so no result in this module is ever approximate. The public API is
1-based: A[i, j] is the entry in row i, column j for 1 <= i, j <= n, matching
the convention used in the docs, error messages and the CLI formats.

Determinants clear denominators once and run fraction-free Bareiss
elimination over plain integers (det A = det(L*A) / L^n for the lcm L of the
entry denominators). The inverse is assembled from integer cofactors of the
same scaled matrix, which keeps the arithmetic in int until the final exact
division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from zmx.errors import SingularMatrixError

Rational = Fraction

Entry = Union[int, str, Fraction]


def _to_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("float entries are not allowed; pass int, str or Fraction")
    return Fraction(x)


class Matrix:
    """Immutable square matrix over Fraction with 1-based entry access."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Entry]]) -> None:
        grid = tuple(tuple(_to_fraction(x) for x in row) for row in rows)
        n = len(grid)
        if n == 0:
            raise ValueError("matrix order must be at least 1")
        for row in grid:
            if len(row) != n:
                raise ValueError(
                    f"expected {n} entries per row in an order-{n} matrix, got {len(row)}"
                )
        self._rows = grid

    @classmethod
    def _wrap(cls, grid: tuple[tuple[Fraction, ...], ...]) -> "Matrix":
        # internal fast path, entries must already be Fractions and square
        m = object.__new__(cls)
        m._rows = grid
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return cls._wrap(
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        )

    @classmethod
    def zeros(cls, n: int) -> "Matrix":
        zero = Fraction(0)
        return cls._wrap(tuple((zero,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> Fraction:
        """Entry in row i, column j (1-based)."""
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"entry ({i},{j}) outside an order-{n} matrix")
        return self._rows[i - 1][j - 1]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entry(i, j)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i - 1]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j - 1] for row in self._rows)

    def transpose(self) -> "Matrix":
        return Matrix._wrap(tuple(zip(*self._rows)))

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self._rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __neg__(self) -> "Matrix":
        return Matrix._wrap(tuple(tuple(-x for x in row) for row in self._rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("matrix orders differ")
        return Matrix._wrap(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self._rows, other._rows)
            )
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("matrix orders differ")
        return Matrix._wrap(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self._rows, other._rows)
            )
        )

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if other.n != self.n:
                raise ValueError("matrix orders differ")
            zero = Fraction(0)
            bcols = tuple(zip(*other._rows))
            out = []
            for arow in self._rows:
                orow = []
                for bcol in bcols:
                    s = zero
                    for a, b in zip(arow, bcol):
                        if a and b:
                            s += a * b
                    orow.append(s)
                out.append(tuple(orow))
            return Matrix._wrap(tuple(out))
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return Matrix._wrap(tuple(tuple(f * x for x in row) for row in self._rows))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __repr__(self) -> str:
        return f"Matrix({[[str(x) for x in row] for row in self._rows]})"

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self._rows]
        widths = [max(len(r[j]) for r in cells) for j in range(self.n)]
        return "\n".join(
            " ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells
        )


@dataclass(frozen=True)
class IndexSet:
    """Ascending subset of {1, ..., base}. May be empty (a complement can be)."""

    base: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.base < 1:
            raise ValueError("base must be at least 1")
        object.__setattr__(self, "members", tuple(self.members))
        prev = 0
        for m in self.members:
            if not isinstance(m, int) or not (1 <= m <= self.base):
                raise ValueError(f"index {m} outside 1..{self.base}")
            if m <= prev:
                raise ValueError("members must be strictly ascending")
            prev = m

    def complement(self) -> "IndexSet":
        inside = set(self.members)
        return IndexSet(self.base, tuple(i for i in range(1, self.base + 1) if i not in inside))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


def _as_indices(n: int, s: Union[IndexSet, Iterable[int]], *, allow_empty: bool = True) -> tuple[int, ...]:
    idx = tuple(s)
    if not idx and not allow_empty:
        raise ValueError("index set must be nonempty")
    prev = 0
    for m in idx:
        if not (1 <= m <= n):
            raise ValueError(f"index {m} outside 1..{n}")
        if m <= prev:
            raise ValueError("indices must be strictly ascending")
        prev = m
    return idx


def _integer_grid(rows: Sequence[Sequence[Fraction]]) -> tuple[int, list[list[int]]]:
    """Clear denominators: returns L > 0 and the integer matrix L * rows."""
    lcm = 1
    for row in rows:
        for x in row:
            lcm = math.lcm(lcm, x.denominator)
    grid = [[x.numerator * (lcm // x.denominator) for x in row] for row in rows]
    return lcm, grid


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix. Destroys m."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                # exact division, a Bareiss invariant
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[-1][-1]


def det(a: Matrix) -> Fraction:
    """Exact determinant."""
    lcm, grid = _integer_grid(a.rows)
    d = _bareiss_det(grid)
    if lcm == 1:
        return Fraction(d)
    return Fraction(d, lcm ** a.n)


def inverse(a: Matrix) -> Matrix:
    """Exact inverse. Raises SingularMatrixError when det(a) = 0."""
    n = a.n
    lcm, grid = _integer_grid(a.rows)
    d = _bareiss_det([row[:] for row in grid])
    if d == 0:
        raise SingularMatrixError("matrix is singular, no inverse exists")
    if n == 1:
        return Matrix._wrap(((Fraction(lcm, d),),))
    out: list[list[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    rng = range(n)
    for i in rng:
        sub_rows = [grid[r] for r in rng if r != i]
        for j in rng:
            minor = [[row[c] for c in rng if c != j] for row in sub_rows]
            cof = _bareiss_det(minor)
            if (i + j) % 2:
                cof = -cof
            # adjugate transposes the cofactor grid
            out[j][i] = Fraction(cof * lcm, d)
    return Matrix._wrap(tuple(tuple(row) for row in out))


def submatrix(a: Matrix, row_idx: Union[IndexSet, Iterable[int]], col_idx: Union[IndexSet, Iterable[int]]) -> Matrix:
    """A[rows|cols] for equal-length ascending 1-based index sequences."""
    ri = _as_indices(a.n, row_idx, allow_empty=False)
    ci = _as_indices(a.n, col_idx, allow_empty=False)
    if len(ri) != len(ci):
        raise ValueError("row and column index sets must have equal size")
    rows = a.rows
    return Matrix._wrap(tuple(tuple(rows[i - 1][j - 1] for j in ci) for i in ri))


def principal_minor(a: Matrix, idx: Union[IndexSet, Iterable[int]]) -> Fraction:
    """det A[S] for S a subset of {1..n}. The empty minor is 1 by convention."""
    s = _as_indices(a.n, idx)
    if not s:
        return Fraction(1)
    return det(submatrix(a, s, s))


def complementary_minor_check(a: Matrix, alpha: Union[IndexSet, Iterable[int]], beta: Union[IndexSet, Iterable[int]]) -> bool:
    """Check the complementary-minor identity tying minors of inverse(a) to a.

    With B = a^{-1} and index sets alpha, beta of common size p:

        det B[alpha|beta] = gamma / det(a) * det a[beta'|alpha']

    where gamma = (-1)^(sum(alpha) + sum(beta)) and ' is complementation. The
    complementary minor of the full set is the empty minor, 1.
    """
    n = a.n
    al = _as_indices(n, alpha, allow_empty=False)
    be = _as_indices(n, beta, allow_empty=False)
    if len(al) != len(be):
        raise ValueError("alpha and beta must have equal size")
    b = inverse(a)
    lhs = det(submatrix(b, al, be))
    al_c = tuple(i for i in range(1, n + 1) if i not in set(al))
    be_c = tuple(i for i in range(1, n + 1) if i not in set(be))
    comp = det(submatrix(a, be_c, al_c)) if be_c else Fraction(1)
    sign = -1 if (sum(al) + sum(be)) % 2 else 1
    return lhs == sign * comp / det(a)

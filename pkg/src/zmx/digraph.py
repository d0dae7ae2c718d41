"""Digraphs of square matrices and the path formula for inverse entries.

The digraph D(A) of an order-n matrix has vertices v1..vn and an edge (i, j)
exactly when a_ij != 0; loops count. Irreducibility of A is strong
connectivity of D(A), with n = 1 irreducible by convention. Path enumeration
is exhaustive DFS over simple paths, so it carries a hard order cap (the
dense worst case is factorial); exceeding the cap raises OrderCapError
rather than silently grinding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from zmx.errors import OrderCapError, SingularMatrixError
from zmx.matrix import Matrix, det, principal_minor

PATH_CAP = 12


@dataclass(frozen=True)
class Digraph:
    """Vertex set {1..n} plus a set of directed edges, loops allowed."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]) -> None:
        if n < 1:
            raise ValueError("digraph needs at least one vertex")
        es = frozenset((int(i), int(j)) for i, j in edges)
        for i, j in es:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge ({i},{j}) outside vertex range 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", es)

    def successors(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(j for (u, j) in self.edges if u == i))


@dataclass(frozen=True)
class Path:
    """Simple path, stored as its vertex sequence inside {1..n}."""

    vertices: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        vs = self.vertices
        if len(vs) < 2:
            raise ValueError("a path has at least one edge")
        if len(set(vs)) != len(vs):
            raise ValueError("path vertices must be distinct")
        if any(not (1 <= v <= self.n) for v in vs):
            raise ValueError(f"path vertices must lie in 1..{self.n}")

    @property
    def length(self) -> int:
        """Edge count l(p)."""
        return len(self.vertices) - 1

    def off_path(self) -> tuple[int, ...]:
        """Ascending complement of the path's vertex set in {1..n}."""
        on = set(self.vertices)
        return tuple(v for v in range(1, self.n + 1) if v not in on)


def digraph_of(a: Matrix) -> Digraph:
    n = a.n
    rows = a.rows
    return Digraph(
        n,
        ((i + 1, j + 1) for i in range(n) for j in range(n) if rows[i][j]),
    )


def _adjacency(d: Digraph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(d.n + 1)]
    for i, j in d.edges:
        adj[i].append(j)
    for lst in adj:
        lst.sort()
    return adj


def is_irreducible(d: Digraph) -> bool:
    """Strong connectivity of d; a single vertex is irreducible by convention."""
    if d.n == 1:
        return True
    fwd: list[list[int]] = [[] for _ in range(d.n + 1)]
    rev: list[list[int]] = [[] for _ in range(d.n + 1)]
    for i, j in d.edges:
        if i != j:
            fwd[i].append(j)
            rev[j].append(i)

    def reaches_all(adj):
        seen = {1}
        stack = [1]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == d.n

    return reaches_all(fwd) and reaches_all(rev)


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise OrderCapError(
            f"order {n} exceeds the path-enumeration cap {cap}; raise the cap explicitly to proceed"
        )


def enumerate_paths(d: Digraph, i: int, j: int, cap: int = PATH_CAP) -> list[Path]:
    """All simple paths from v_i to v_j, i != j, in shortlex order."""
    if not (1 <= i <= d.n and 1 <= j <= d.n):
        raise ValueError(f"vertices must lie in 1..{d.n}")
    if i == j:
        raise ValueError("path endpoints must differ")
    _check_cap(d.n, cap)
    adj = _adjacency(d)
    found: list[tuple[int, ...]] = []
    trail = [i]
    on_trail = [False] * (d.n + 1)
    on_trail[i] = True

    def walk(u: int) -> None:
        for w in adj[u]:
            if w == j:
                found.append(tuple(trail) + (j,))
            elif not on_trail[w]:
                on_trail[w] = True
                trail.append(w)
                walk(w)
                trail.pop()
                on_trail[w] = False

    walk(i)
    found.sort(key=lambda vs: (len(vs), vs))
    return [Path(vs, d.n) for vs in found]


def _more_than_one_path(adj: list[list[int]], n: int, i: int, j: int) -> bool:
    count = 0
    on_trail = [False] * (n + 1)
    on_trail[i] = True

    def walk(u: int) -> bool:
        nonlocal count
        for w in adj[u]:
            if w == j:
                count += 1
                if count > 1:
                    return True
            elif not on_trail[w]:
                on_trail[w] = True
                if walk(w):
                    return True
                on_trail[w] = False
        return False

    return walk(i)


def is_unipathic(d: Digraph, cap: int = PATH_CAP) -> bool:
    """True when every ordered vertex pair (i, j), i != j, has at most one simple path."""
    _check_cap(d.n, cap)
    adj = _adjacency(d)
    for i in range(1, d.n + 1):
        for j in range(1, d.n + 1):
            if i != j and _more_than_one_path(adj, d.n, i, j):
                return False
    return True


def maybee_entry(a: Matrix, i: int, j: int, cap: int = PATH_CAP) -> Fraction:
    """Entry (i, j) of inverse(a) computed by the path formula.

    Diagonal: det A(i) / det A, where A(i) drops row and column i. Off the
    diagonal the entry is a signed sum over the simple paths p from v_i to
    v_j in D(A):

        (1 / det A) * sum_p (-1)^l(p) * A[p] * det A[V(p)]

    with A[p] the product of the entries along p and V(p) the vertices off p.
    The empty minor (paths covering every vertex) contributes 1.
    """
    n = a.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices must lie in 1..{n}")
    d_a = det(a)
    if d_a == 0:
        raise SingularMatrixError("matrix is singular, no inverse exists")
    if i == j:
        others = tuple(k for k in range(1, n + 1) if k != i)
        return principal_minor(a, others) / d_a
    total = Fraction(0)
    for p in enumerate_paths(digraph_of(a), i, j, cap):
        weight = Fraction(1)
        vs = p.vertices
        for u, w in zip(vs, vs[1:]):
            weight *= a.entry(u, w)
        term = weight * principal_minor(a, p.off_path())
        total += -term if p.length % 2 else term
    return total / d_a


def to_dot(d: Digraph) -> str:
    """DOT source for d, loop edges included, deterministically ordered."""
    lines = ["digraph {"]
    for v in range(1, d.n + 1):
        lines.append(f"  v{v};")
    for i, j in sorted(d.edges):
        lines.append(f"  v{i} -> v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"

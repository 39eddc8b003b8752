"""Exact Laplacian machinery: tree counts, two-forest counts, resistances.

count_spanning_trees is the matrix-tree determinant; count_two_forests is the
all-minors extension (drop both vertices of the pair).  Determinants run over
plain Python ints with Bareiss elimination, so nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass
from typing import Sequence

from .graphs import LabeledGraph


@dataclass(frozen=True)
class LaplacianMatrix:
    order: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n, rows = self.order, self.entries
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("entries must form an order x order square")
        for i in range(n):
            if sum(rows[i]) != 0:
                raise ValueError(f"row {i} does not sum to zero")
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("Laplacian must be symmetric")
                if i != j and rows[i][j] not in (0, -1):
                    raise ValueError("off-diagonal entries must be 0 or -1")

    def minor(self, drop: set[int]) -> list[list[int]]:
        keep = [i for i in range(self.order) if i not in drop]
        return [[self.entries[i][j] for j in keep] for i in keep]


def laplacian(g: LabeledGraph) -> LaplacianMatrix:
    n = g.vertex_count
    m = [[0] * n for _ in range(n)]
    for a, b in g.edges:
        m[a][b] -= 1
        m[b][a] -= 1
        m[a][a] += 1
        m[b][b] += 1
    return LaplacianMatrix(n, tuple(tuple(row) for row in m))


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination.

    Every intermediate entry is a minor of the input, so the integer divisions
    are exact.  Zero pivots trigger a row swap; if no swap helps, the matrix
    is singular and the answer is 0.  The empty matrix has determinant 1.
    """
    n = len(matrix)
    if n == 0:
        return 1
    rows = [list(r) for r in matrix]
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            lead = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def count_spanning_trees(g: LabeledGraph) -> int:
    """Spanning-tree count via the principal minor that drops vertex 0.

    Which vertex is dropped does not matter; invariance is covered by tests.
    Disconnected graphs give 0 rather than an error.
    """
    if g.vertex_count == 1:
        return 1
    return det_exact(laplacian(g).minor({0}))


def count_two_forests(g: LabeledGraph, u: int, v: int) -> int:
    """Number of two-component spanning forests with u and v in different parts."""
    if u == v:
        raise ValueError("the two vertices must be distinct")
    for w in (u, v):
        if not 0 <= w < g.vertex_count:
            raise ValueError(f"vertex {w} out of range")
    return det_exact(laplacian(g).minor({u, v}))


def effective_resistance(g: LabeledGraph, u: int, v: int) -> Fraction:
    """Exact resistance between u and v with every edge a unit resistor.

    Equals count_two_forests(g,u,v) / count_spanning_trees(g).  u == v gives 0.
    """
    if u == v:
        if not 0 <= u < g.vertex_count:
            raise ValueError(f"vertex {u} out of range")
        return Fraction(0)
    trees = count_spanning_trees(g)
    if trees == 0:
        raise ValueError("infinite resistance: graph is disconnected")
    return Fraction(count_two_forests(g, u, v), trees)

"""Brute-force ground truth for small graphs.

Everything here enumerates explicitly and is meant to be audited, not to be
fast.  The recursion prunes cycles early with a rollback union-find, and the
output order is the lexicographic order of the chosen edge subsets, so runs
are deterministic and duplicate-free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Edge, LabeledGraph, components, make_wheel, rotate_rim_labels
from .report import Check, info_check
from .sequences import fib

DEFAULT_ENUM_CAP = 10


class EnumerationCapExceeded(ValueError):
    pass


def _check_cap(g: LabeledGraph, cap: int):
    if g.vertex_count > cap:
        raise EnumerationCapExceeded(
            f"graph has {g.vertex_count} vertices, enumeration cap is {cap}"
        )


def _acyclic_subsets(g: LabeledGraph, size: int) -> list[tuple[Edge, ...]]:
    # backtracking over the sorted edge list; cycle-closing edges pruned at once
    edges = g.edges
    total = len(edges)
    parent = list(range(g.vertex_count))
    rank = [1] * g.vertex_count

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list[Edge] = []
    out: list[tuple[Edge, ...]] = []

    def walk(start: int, need: int):
        if need == 0:
            out.append(tuple(chosen))
            return
        for idx in range(start, total - need + 1):
            a, b = edges[idx]
            ra, rb = find(a), find(b)
            if ra == rb:
                continue
            if rank[ra] < rank[rb]:
                ra, rb = rb, ra
            parent[rb] = ra
            rank[ra] += rank[rb]
            chosen.append(edges[idx])
            walk(idx + 1, need - 1)
            chosen.pop()
            rank[ra] -= rank[rb]
            parent[rb] = rb

    walk(0, size)
    return out


def enum_spanning_trees(g: LabeledGraph, cap: int = DEFAULT_ENUM_CAP) -> list[tuple[Edge, ...]]:
    """All spanning trees as canonical edge tuples, lexicographically ordered."""
    _check_cap(g, cap)
    # V-1 acyclic edges on V vertices are automatically connected
    return _acyclic_subsets(g, g.vertex_count - 1)


@dataclass(frozen=True)
class ForestRecord:
    edges: tuple[Edge, ...]
    parts: tuple[tuple[int, ...], ...]


def enum_two_forests(g: LabeledGraph, u: int, v: int, cap: int = DEFAULT_ENUM_CAP) -> list[ForestRecord]:
    """All two-component spanning forests with u and v in different parts."""
    if u == v:
        raise ValueError("the two vertices must be distinct")
    _check_cap(g, cap)
    out = []
    for sub in _acyclic_subsets(g, g.vertex_count - 2):
        parts = tuple(components(g, sub))
        pu = next(p for p in parts if u in p)
        if v in pu:
            continue
        out.append(ForestRecord(sub, parts))
    return out


@dataclass(frozen=True)
class ArcForestRecord:
    """Two-component wheel forest whose center-free part is a rim arc."""

    edges: tuple[Edge, ...]
    parts: tuple[tuple[int, ...], ...]
    arc_start: int
    arc_len: int


def rim_arc_of(n: int, rim_part: tuple[int, ...], cycle_edges) -> tuple[int, int]:
    """(start, length) of a rim vertex set that must be a contiguous arc.

    A full-rim part takes its start from the one missing cycle edge: missing
    {i, i+1} starts the arc at i+1, missing {1, n} starts it at 1.
    """
    k = len(rim_part)
    members = set(rim_part)
    if k == n:
        present = set(cycle_edges)
        missing = [
            e
            for i in range(1, n + 1)
            if (e := (min(i, i % n + 1), max(i, i % n + 1))) not in present
        ]
        if len(missing) != 1:
            raise ValueError("full-rim component must omit exactly one cycle edge")
        a, b = missing[0]
        start = 1 if (a, b) == (1, n) else b
        return start, n
    starts = [v for v in rim_part if (v - 2) % n + 1 not in members]
    if len(starts) != 1 or members != {(starts[0] - 1 + t) % n + 1 for t in range(k)}:
        raise ValueError("component avoiding the center is not a contiguous rim arc")
    return starts[0], k


def enum_arc_forests(n: int, cap: int = DEFAULT_ENUM_CAP) -> list[ArcForestRecord]:
    """Two-component spanning forests of the wheel, center part vs rim-only part.

    The defining condition (one part holds vertex 0, the other only rim
    vertices) is kept as an explicit filter even though any two-component
    spanning forest of a wheel satisfies it.
    """
    g = make_wheel(n)
    _check_cap(g, cap)
    out = []
    for sub in _acyclic_subsets(g, n - 1):
        parts = tuple(components(g, sub))
        if len(parts) != 2:
            continue
        center_part = next(p for p in parts if 0 in p)
        rim_part = next(p for p in parts if 0 not in p)
        if 0 in rim_part:  # unreachable, spells out the definition
            continue
        cycle_edges = [e for e in sub if e[0] in rim_part]
        start, k = rim_arc_of(n, rim_part, cycle_edges)
        out.append(ArcForestRecord(sub, parts, start, k))
    return out


def rotation_class_representative(edges, n: int) -> tuple[Edge, ...]:
    """Lexicographically least relabeling over all n rim rotations."""
    return min(rotate_rim_labels(edges, s, n) for s in range(n))


def arc_forest_census(n_values, cap: int = DEFAULT_ENUM_CAP) -> list[Check]:
    """Measured cardinalities beside candidate closed forms, as info rows.

    Reports the labeled count and the rotation-class count next to f(2n-2),
    f(2n-1), f(2n) and n*f(2n-1), and names whichever candidates match.
    Nothing here asserts; the comparison itself is the deliverable.
    """
    checks = []
    for n in n_values:
        records = enum_arc_forests(n, cap=cap)
        labeled = len(records)
        classes = len({rotation_class_representative(r.edges, n) for r in records})
        candidates = {
            "f(2n-2)": fib(2 * n - 2),
            "f(2n-1)": fib(2 * n - 1),
            "f(2n)": fib(2 * n),
            "n*f(2n-1)": n * fib(2 * n - 1),
        }
        label_hits = [name for name, v in candidates.items() if v == labeled] or ["none"]
        class_hits = [name for name, v in candidates.items() if v == classes] or ["none"]
        values = " ".join(f"{name}={v}" for name, v in candidates.items())
        checks.append(
            info_check(
                "arc-forest census",
                f"n={n}",
                f"labeled={labeled} classes={classes} {values} "
                f"labeled_matches={','.join(label_hits)} class_matches={','.join(class_hits)}",
            )
        )
    return checks

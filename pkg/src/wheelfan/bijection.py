"""Forward map from conditioned wheel forests to fan spanning trees, and back.

A two-component spanning forest of a wheel splits into a component holding
the center and a center-free component, and the center-free component is
always a contiguous rim arc.  After rotating the rim so the arc starts at
vertex 1 (arc vertices 1..k, cut vertex k+1), the forward map collapses the
cut vertex onto the end of the arc and relabels everything else down by one,
landing in the fan with n-1 path vertices:

    rim vertex v:  v       for v <= k
                   k       for v == k+1   (cut vertex)
                   v - 1   for v >= k+2
    center 0 stays the hub 0.

When the arc covers the whole rim (center isolated) the last arc edge
{n-1, n} is dropped and the hub is attached to path vertex 1 instead.

The inverse reads the maximal initial path run u_1..u_k of a fan tree and
undoes the collapse: hub edge {0, i} with i >= k becomes the spoke {0, i+1},
and a tree that is the full path plus only {0, 1} becomes the isolated-center
forest.  Fan trees with a path edge off the initial run, or a hub edge inside
it, are not images of this construction and are rejected.

The forward map is measured, not assumed: there are f(2n-1) rotation classes
but only f(2n-2) spanning trees of the target fan, so it cannot be injective;
fiber_report quantifies exactly how the classes collapse.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graphs import (
    Edge,
    canonical_edge,
    components,
    is_spanning_tree,
    make_fan,
    make_wheel,
    rotate_rim_labels,
)
from .enumeration import DEFAULT_ENUM_CAP, enum_arc_forests, enum_spanning_trees, rim_arc_of


def _analyze_forest(n: int, edges) -> tuple[tuple[Edge, ...], tuple[Edge, ...], int, int]:
    """Split forest edges into center-side and arc-side, locating the arc."""
    if n < 3:
        raise ValueError("wheel requires at least 3 rim vertices")
    wheel = make_wheel(n)
    edges = tuple(sorted(canonical_edge(a, b) for a, b in edges))
    if len(set(edges)) != len(edges):
        raise ValueError("duplicate edge in forest")
    if len(edges) != n - 1:
        raise ValueError(f"forest on the wheel with {n} rim vertices needs {n - 1} edges, got {len(edges)}")
    parts = components(wheel, edges)  # also validates edges against the wheel
    if len(parts) != 2:
        raise ValueError("edge set is not a two-component spanning forest (it contains a cycle)")
    rim_part = next(p for p in parts if 0 not in p)
    cycle_edges = tuple(e for e in edges if e[0] in rim_part)
    center_edges = tuple(e for e in edges if e[0] not in rim_part)
    start, k = rim_arc_of(n, rim_part, cycle_edges)
    return center_edges, cycle_edges, start, k


@dataclass(frozen=True)
class WheelForest:
    """Two-component spanning forest of a wheel, arc metadata included.

    center_edges live in the component holding vertex 0 (spokes and possibly
    rim edges); cycle_edges form the path on the center-free arc, which has
    arc_len vertices and starts at rim position arc_start.
    """

    n: int
    center_edges: tuple[Edge, ...]
    cycle_edges: tuple[Edge, ...]
    arc_start: int
    arc_len: int

    def __post_init__(self):
        ce, cy, start, k = _analyze_forest(self.n, self.center_edges + self.cycle_edges)
        if (ce, cy, start, k) != (self.center_edges, self.cycle_edges, self.arc_start, self.arc_len):
            raise ValueError("forest fields are inconsistent with the edge set")

    @classmethod
    def from_edges(cls, n: int, edges) -> "WheelForest":
        ce, cy, start, k = _analyze_forest(n, edges)
        return cls(n, ce, cy, start, k)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.center_edges + self.cycle_edges))


@dataclass(frozen=True)
class FanTree:
    m: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("fan requires at least 1 path vertex")
        if not is_spanning_tree(make_fan(self.m), self.edges):
            raise ValueError(f"not a spanning tree of the fan with {self.m} path vertices")

    @classmethod
    def from_edges(cls, m: int, edges) -> "FanTree":
        return cls(m, tuple(sorted(canonical_edge(a, b) for a, b in edges)))


@dataclass(frozen=True)
class NormalizedForest:
    """Forest rotated so its arc occupies rim positions 1..arc_len.

    rotation is the shift that recovers the original labeling:
    rotate_rim_labels(forest.edges, rotation, n) == original edges.
    """

    forest: WheelForest
    rotation: int

    def __post_init__(self):
        if self.forest.arc_start != 1:
            raise ValueError("normalized forest must have its arc start at rim position 1")
        if not 0 <= self.rotation < self.forest.n:
            raise ValueError("rotation out of range")


def normalize(f: WheelForest) -> NormalizedForest:
    rotation = f.arc_start - 1
    shifted = rotate_rim_labels(f.edges, -rotation, f.n)
    return NormalizedForest(WheelForest.from_edges(f.n, shifted), rotation)


def forward(f: WheelForest) -> FanTree:
    """Image of the forest in the fan with n-1 path vertices.

    Normalizes first, so rotation-equivalent forests share one image.
    """
    nf = normalize(f)
    n, k = f.n, nf.forest.arc_len
    if k == n:
        # isolated center: keep the path on 1..n-1, hang the hub on vertex 1
        image = [(i, i + 1) for i in range(1, n - 1)]
        image.append((0, 1))
    else:

        def collapse(v: int) -> int:
            if v <= k:
                return v
            return k if v == k + 1 else v - 1

        image = [canonical_edge(collapse(a), collapse(b)) for a, b in nf.forest.edges]
        if len(set(image)) != len(image):  # cannot happen; guards the collapse
            raise AssertionError("forward map collapsed two edges together")
    return FanTree.from_edges(n - 1, image)


def inverse(tree: FanTree, n: int) -> WheelForest:
    """Preimage of a fan tree under forward, as a normalized forest.

    Only trees whose path edges form one initial run u_1..u_k and whose hub
    edges all have index >= k are images; anything else raises.
    """
    if n != tree.m + 1:
        raise ValueError("rim size must be one more than the fan path size")
    present = set(tree.edges)
    m = tree.m
    k = 1
    while k < m and (k, k + 1) in present:
        k += 1
    hub = [e for e in tree.edges if e[0] == 0]
    path_edges = {e for e in tree.edges if e[0] != 0}
    full_path = {(i, i + 1) for i in range(1, m)}
    if k == m and path_edges == full_path and hub == [(0, 1)]:
        # hub attached only at vertex 1 on the full path: the isolated-center forest
        return WheelForest.from_edges(n, [(i, i + 1) for i in range(1, n)])
    if path_edges != {(i, i + 1) for i in range(1, k)}:
        raise ValueError("not in the image convention: path edges must form one initial run")
    for _, i in hub:
        if i < k:
            raise ValueError("not in the image convention: hub edge inside the initial path run")
    rebuilt = [(i, i + 1) for i in range(1, k)]
    rebuilt.extend((0, i + 1) for _, i in hub)
    return WheelForest.from_edges(n, rebuilt)


@dataclass(frozen=True)
class FiberReport:
    """How the forward map folds the arc forests of one wheel onto fan trees.

    Fiber histograms pair a fiber size with how many images have it; the
    labeled histogram counts labeled forests per image, the normalized one
    counts rotation classes per image.  roundtrip_* restrict inverse(forward)
    to normalized representatives.
    """

    n: int
    labeled_count: int
    class_count: int
    image_count: int
    fan_tree_count: int
    labeled_fibers: tuple[tuple[int, int], ...]
    normalized_fibers: tuple[tuple[int, int], ...]
    all_images_valid: bool
    covers_target_fan: bool
    target_path_vertices: int
    roundtrip_ok: int
    roundtrip_total: int

    @property
    def roundtrip_pass(self) -> bool:
        return self.roundtrip_ok == self.roundtrip_total

    @property
    def max_fiber(self) -> int:
        return max(size for size, _ in self.normalized_fibers)

    def machine_line(self) -> str:
        verdict = "pass" if self.roundtrip_pass else "fail"
        return f"n={self.n} images={self.image_count} fibers_max={self.max_fiber} roundtrip={verdict}"

    def render_lines(self) -> list[str]:
        def hist(pairs):
            return " ".join(f"{size}x{count}" for size, count in pairs)

        yesno = lambda b: "yes" if b else "no"
        return [
            f"rim vertices: {self.n}",
            f"labeled arc forests: {self.labeled_count}",
            f"rotation classes: {self.class_count}",
            f"distinct forward images: {self.image_count}",
            f"target fan path vertices: {self.target_path_vertices}",
            f"fan spanning trees: {self.fan_tree_count}",
            f"all images are fan spanning trees: {yesno(self.all_images_valid)}",
            f"images cover every fan spanning tree: {yesno(self.covers_target_fan)}",
            f"labeled fiber histogram (size x images): {hist(self.labeled_fibers)}",
            f"normalized fiber histogram (size x images): {hist(self.normalized_fibers)}",
            f"round trips on normalized representatives: {self.roundtrip_ok}/{self.roundtrip_total}",
            "note: images use one path vertex fewer than the rim size; "
            f"{self.class_count} rotation classes share {self.image_count} images, "
            "so the map cannot be inverted everywhere",
            self.machine_line(),
        ]


def fiber_report(n: int, cap: int = DEFAULT_ENUM_CAP) -> FiberReport:
    records = enum_arc_forests(n, cap=cap)
    by_class: dict[tuple[Edge, ...], NormalizedForest] = {}
    labeled_per_class: Counter = Counter()
    for rec in records:
        nf = normalize(WheelForest.from_edges(n, rec.edges))
        by_class[nf.forest.edges] = nf
        labeled_per_class[nf.forest.edges] += 1

    labeled_per_image: Counter = Counter()
    classes_per_image: Counter = Counter()
    valid = 0
    roundtrip_ok = 0
    for rep_edges, nf in by_class.items():
        try:
            image = forward(nf.forest)
        except ValueError:
            continue
        valid += 1
        classes_per_image[image.edges] += 1
        labeled_per_image[image.edges] += labeled_per_class[rep_edges]
        try:
            if inverse(image, n).edges == rep_edges:
                roundtrip_ok += 1
        except ValueError:
            pass

    fan_trees = {tuple(t) for t in enum_spanning_trees(make_fan(n - 1), cap=cap)}
    to_hist = lambda c: tuple(sorted(Counter(c.values()).items()))
    return FiberReport(
        n=n,
        labeled_count=len(records),
        class_count=len(by_class),
        image_count=len(classes_per_image),
        fan_tree_count=len(fan_trees),
        labeled_fibers=to_hist(labeled_per_image),
        normalized_fibers=to_hist(classes_per_image),
        all_images_valid=valid == len(by_class),
        covers_target_fan=set(classes_per_image) == fan_trees,
        target_path_vertices=n - 1,
        roundtrip_ok=roundtrip_ok,
        roundtrip_total=len(by_class),
    )

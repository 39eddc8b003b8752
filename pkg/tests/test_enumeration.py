from itertools import combinations

import pytest

from wheelfan.enumeration import (
    ArcForestRecord,
    EnumerationCapExceeded,
    arc_forest_census,
    enum_arc_forests,
    enum_spanning_trees,
    enum_two_forests,
    rim_arc_of,
    rotation_class_representative,
)
from wheelfan.graphs import components, make_fan, make_graph, make_wheel, rotate_rim_labels
from wheelfan.kirchhoff import count_spanning_trees, count_two_forests


def test_triangle_has_three_trees():
    g = make_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert len(enum_spanning_trees(g)) == 3


@pytest.mark.parametrize("n", range(3, 8))
def test_wheel_tree_enumeration_matches_determinant(n):
    g = make_wheel(n)
    assert len(enum_spanning_trees(g)) == count_spanning_trees(g)


@pytest.mark.parametrize("m", range(1, 8))
def test_fan_tree_enumeration_matches_determinant(m):
    g = make_fan(m)
    assert len(enum_spanning_trees(g)) == count_spanning_trees(g)


def test_enumeration_order_is_lexicographic_and_duplicate_free():
    trees = enum_spanning_trees(make_wheel(4))
    assert trees == sorted(trees)
    assert len(set(trees)) == len(trees)
    # every entry is itself canonically sorted
    assert all(list(t) == sorted(t) for t in trees)


def test_two_forest_enumeration():
    k4 = make_wheel(3)
    recs = enum_two_forests(k4, 1, 2)
    assert len(recs) == 8 == count_two_forests(k4, 1, 2)
    assert len(enum_two_forests(k4, 1, 0)) == 8
    for rec in recs:
        assert rec.parts == tuple(components(k4, rec.edges))
        assert len(rec.parts) == 2


def test_two_forests_on_a_path():
    path = make_graph(3, [(0, 1), (1, 2)])
    assert len(enum_two_forests(path, 0, 2)) == 2  # drop either edge


def test_cap_enforced():
    with pytest.raises(EnumerationCapExceeded, match="cap is 10"):
        enum_spanning_trees(make_wheel(10))
    with pytest.raises(EnumerationCapExceeded, match="cap is 5"):
        enum_two_forests(make_wheel(5), 1, 2, cap=5)
    assert len(enum_spanning_trees(make_wheel(4), cap=5)) == 45


def test_arc_forests_basic_membership():
    three = enum_arc_forests(3)
    assert any(r.edges == ((1, 2), (2, 3)) for r in three)  # isolated center
    four = enum_arc_forests(4)
    target = next(r for r in four if r.edges == ((0, 4), (1, 2), (2, 3)))
    assert target.arc_start == 1 and target.arc_len == 3
    assert target.parts == ((0, 4), (1, 2, 3))


@pytest.mark.parametrize("n", range(3, 7))
def test_arc_forest_structure(n):
    for rec in enum_arc_forests(n):
        assert len(rec.parts) == 2
        rim_part = next(p for p in rec.parts if 0 not in p)
        # contiguity: the part is exactly the arc the metadata claims
        expected = {(rec.arc_start - 1 + t) % n + 1 for t in range(rec.arc_len)}
        assert set(rim_part) == expected
        assert 1 <= rec.arc_len <= n


@pytest.mark.parametrize("n", range(3, 7))
def test_arc_forests_are_exactly_the_two_component_forests(n):
    # the defining filter turns out to be vacuous: every two-component
    # spanning forest of a wheel has a center-free part made of rim vertices
    g = make_wheel(n)
    count = sum(
        1
        for sub in combinations(g.edges, n - 1)
        if len(components(g, sub)) == 2
    )
    assert len(enum_arc_forests(n)) == count


def test_full_rim_arc_start_follows_missing_edge():
    assert rim_arc_of(4, (1, 2, 3, 4), [(1, 2), (2, 3), (3, 4)]) == (1, 4)
    assert rim_arc_of(4, (1, 2, 3, 4), [(2, 3), (3, 4), (1, 4)]) == (2, 4)
    assert rim_arc_of(4, (1, 2, 3, 4), [(1, 2), (3, 4), (1, 4)]) == (3, 4)


def test_rim_arc_rejects_non_arcs():
    with pytest.raises(ValueError, match="contiguous"):
        rim_arc_of(5, (1, 3), [])


def test_rotation_representative_is_rotation_invariant():
    edges = ((0, 4), (1, 2), (2, 3))
    rep = rotation_class_representative(edges, 5)
    for s in range(5):
        assert rotation_class_representative(rotate_rim_labels(edges, s, 5), 5) == rep


FROZEN_COUNTS = {3: (15, 5), 4: (52, 13), 5: (170, 34), 6: (534, 89), 7: (1631, 233)}


@pytest.mark.parametrize("n", sorted(FROZEN_COUNTS))
def test_arc_forest_counts(n):
    labeled, classes = FROZEN_COUNTS[n]
    records = enum_arc_forests(n)
    assert len(records) == labeled
    reps = {rotation_class_representative(r.edges, n) for r in records}
    assert len(reps) == classes


def test_census_reports_matches_without_asserting():
    checks = arc_forest_census(range(3, 6))
    assert len(checks) == 3
    assert all(c.ok is None for c in checks)
    for c, n in zip(checks, range(3, 6)):
        assert f"n={n}" == c.params
        assert "labeled_matches=n*f(2n-1)" in c.actual
        assert "class_matches=f(2n-1)" in c.actual

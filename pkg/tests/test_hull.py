from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hullgap.geom import Point, PointClass, orient, point_in_triangle, TriangleLocation
from hullgap.hull import (
    any_point_inside,
    compute_hull,
    distinct_and_convex_position,
    extreme_oracle,
    extreme_oracle_all,
    in_convex_position,
)
from hullgap.oracles import brute_point_classification
from hullgap.reductions import Instance, build_construction
from strategies import point_sets

P = Point.of
E, B, I = PointClass.EXTREME, PointClass.BOUNDARY, PointClass.INTERIOR
SQUARE = [P(0, 0), P(2, 0), P(2, 2), P(0, 2), P(1, 1)]


def S(values, eps):
    return build_construction(Instance.of(values, eps)).points


def test_square_with_center(backend):
    r = compute_hull(SQUARE)
    assert r.classes == (E, E, E, E, I)
    assert r.hull_vertices == (P(0, 0), P(2, 0), P(2, 2), P(0, 2))


def test_collinear_triple(backend):
    r = compute_hull([P(0, 0), P(1, 0), P(2, 0)])
    assert r.classes == (E, B, E)
    assert r.hull_vertices == (P(0, 0), P(2, 0))


def test_construction_all_extreme():
    pts = [P(0, 0), P("1/2", "1/2"), P(2, 4), P("5/2", "13/2")]
    assert compute_hull(pts).classes == (E, E, E, E)
    # lower chain slopes strictly increase: 1 < 7/3 < 5
    slopes = [(q.y - p.y) / (q.x - p.x) for p, q in zip(pts, pts[1:])]
    assert slopes == [F(1), F(7, 3), F(5)]


@pytest.mark.parametrize("pts, classes, cycle", [
    ([P(3, 4)], (E,), 1),
    ([P(1, 1)] * 4, (E,) * 4, 1),
    ([P(0, 0), P(3, 3), P(1, 1), P(2, 2), P(1, 1)], (E, E, B, B, B), 2),
    ([P(0, 0), P(0, 2), P(0, 1)], (E, E, B), 2),
    ([P(0, 0), P(1, 0)], (E, E), 2),
])
def test_degenerate_inputs(pts, classes, cycle):
    r = compute_hull(pts)
    assert r.classes == classes
    assert len(r.hull_vertices) == cycle
    assert not any_point_inside(pts)


def test_vertical_edges_are_boundary():
    pts = [P(0, 0), P(0, 1), P(0, 2), P(2, 0), P(2, 1), P(2, 2), P(1, 1), P(1, 2)]
    assert compute_hull(pts).classes == (E, B, E, E, B, E, I, B)


def test_empty_input_rejected():
    with pytest.raises(ValueError):
        compute_hull([])
    with pytest.raises(ValueError):
        any_point_inside([])


def test_any_point_inside_examples():
    assert any_point_inside(SQUARE)
    assert any_point_inside(S([0, "1/2"], 1))
    assert compute_hull(S([0, "1/2"], 1)).classes[2] is I


@given(st.lists(st.builds(Point, st.integers(-5, 5).map(F), st.integers(-5, 5).map(F)), min_size=1, max_size=3))
def test_at_most_three_points_have_no_interior(pts):
    assert not any_point_inside(pts)


def test_convex_position_examples():
    assert in_convex_position([P(0, 0), P(1, 0), P(0, 1)])
    dup = [P(0, 0), P(1, 1), P(2, 0), P(1, 1)]
    assert in_convex_position(dup)
    assert not distinct_and_convex_position(dup)
    assert distinct_and_convex_position([P(0, 0), P(1, 1), P(2, 0)])
    edge_case = S([0, 1], 1)
    assert not in_convex_position(edge_case)
    assert not any_point_inside(edge_case)
    assert compute_hull(edge_case).classes[2] is B


def test_extreme_oracle_examples(backend):
    assert not extreme_oracle(SQUARE, 4)
    assert all(extreme_oracle(SQUARE, k) for k in range(4))
    assert extreme_oracle([P(7, 7)], 0)
    assert extreme_oracle([P(7, 7), P(7, 7)], 1)
    assert not extreme_oracle([P(0, 0), P(1, 0), P(2, 0)], 1)
    with pytest.raises(ValueError):
        extreme_oracle(SQUARE, 5)


def brute_interior(points, report):
    """Strictly left of every edge of the hull cycle."""
    cyc = report.hull_vertices
    if len(cyc) < 3:
        return [False] * len(points)
    if len(cyc) == 3:
        return [point_in_triangle(p, *cyc) is TriangleLocation.STRICTLY_INSIDE for p in points]
    return [all(orient(cyc[k], cyc[(k + 1) % len(cyc)], p) > 0 for k in range(len(cyc))) for p in points]


@given(point_sets)
def test_labels_match_oracles(pts):
    r = compute_hull(pts)
    assert list(r.classes) == brute_point_classification(pts)
    assert [c is E for c in r.classes] == extreme_oracle_all(pts)
    assert [c is I for c in r.classes] == brute_interior(pts, r)


@given(point_sets)
def test_cycle_strictly_convex_ccw(pts):
    cyc = compute_hull(pts).hull_vertices
    assert len(set(cyc)) == len(cyc)
    assert cyc[0] == min(pts)
    if len(cyc) >= 3:
        for k in range(len(cyc)):
            assert orient(cyc[k - 1], cyc[k], cyc[(k + 1) % len(cyc)]) == 1


def _rotate_to_min(cyc):
    k = cyc.index(min(cyc))
    return cyc[k:] + cyc[:k]


@given(point_sets, st.randoms(use_true_random=False))
def test_permutation_invariance(pts, rnd):
    order = list(range(len(pts)))
    rnd.shuffle(order)
    a = compute_hull(pts)
    b = compute_hull([pts[k] for k in order])
    assert [b.classes[order.index(k)] for k in range(len(pts))] == list(a.classes)
    assert _rotate_to_min(list(b.hull_vertices)) == _rotate_to_min(list(a.hull_vertices))


@given(point_sets, st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 9), st.integers(1, 9))
def test_translation_and_scaling(pts, dx, dy, num, den):
    s = F(num, den)
    moved = [Point(p.x * s + dx, p.y * s + dy) for p in pts]
    a = compute_hull(pts)
    b = compute_hull(moved)
    assert a.classes == b.classes
    assert b.hull_vertices == tuple(Point(p.x * s + dx, p.y * s + dy) for p in a.hull_vertices)


@given(point_sets)
def test_convex_position_excludes_interior(pts):
    if in_convex_position(pts):
        assert not any_point_inside(pts)


@given(point_sets)
def test_backends_agree(pts):
    import os

    os.environ["HULLGAP_NUMBA"] = "0"
    try:
        slow = compute_hull(pts)
        slow_cone = extreme_oracle_all(pts)
    finally:
        os.environ.pop("HULLGAP_NUMBA")
    fast = compute_hull(pts)
    assert slow == fast
    assert slow_cone == extreme_oracle_all(pts)


def test_big_integer_path_matches():
    # coordinates far beyond int64 after scaling
    tiny = F(1, 2**90)
    base = [P(0, 0), P(4, 0), P(4, 4), P(0, 4), P(2, 2), P(2, 0)]
    pts = [Point(p.x + tiny * k, p.y - tiny * k * k) for k, p in enumerate(base)]
    r = compute_hull(pts)
    assert list(r.classes) == brute_point_classification(pts)
    assert [c is E for c in r.classes] == extreme_oracle_all(pts)
    assert r.classes[4] is I


def test_predicate_counts():
    r = compute_hull(SQUARE)
    assert r.orient_calls > 0 and r.compare_calls > 0
    assert r.predicate_calls == r.orient_calls + r.compare_calls
    assert compute_hull([P(1, 1)]).orient_calls == 0

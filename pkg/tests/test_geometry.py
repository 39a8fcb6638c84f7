from fractions import Fraction

import pytest

from untangle.errors import ValidationError
from untangle.geometry import (
    Point,
    centroid,
    closed_segments_intersect,
    convex_hull,
    is_strictly_convex_ccw,
    is_strictly_convex_polygon,
    on_closed_segment,
    on_open_segment,
    orientation,
    point_in_convex_polygon,
    scale_to_integers,
)


def test_point_accepts_mixed_rationals():
    p = Point("1/3", 2)
    assert p.x == Fraction(1, 3)
    assert p.y == 2
    assert p.as_pairs() == ((1, 3), (2, 1))


def test_orientation_signs():
    a, b = Point(0, 0), Point(1, 0)
    assert orientation(a, b, Point(0, 1)) == 1
    assert orientation(a, b, Point(0, -1)) == -1
    assert orientation(a, b, Point(5, 0)) == 0


def test_orientation_is_exact_at_tiny_scale():
    # a float implementation would misjudge this near-collinear triple
    eps = Fraction(1, 10 ** 40)
    assert orientation(Point(0, 0), Point(1, 0), Point(2, eps)) == 1
    assert orientation(Point(0, 0), Point(1, 0), Point(2, -eps)) == -1


def test_on_segment_predicates():
    a, b = Point(0, 0), Point(4, 4)
    assert on_closed_segment(a, b, Point(2, 2))
    assert on_closed_segment(a, b, a)
    assert not on_open_segment(a, b, a)
    assert on_open_segment(a, b, Point(1, 1))
    assert not on_closed_segment(a, b, Point(5, 5))
    assert not on_closed_segment(a, b, Point(2, 3))


def test_closed_segments_intersect_cases():
    # proper crossing
    assert closed_segments_intersect(Point(0, 0), Point(2, 2), Point(0, 2), Point(2, 0))
    # endpoint touch
    assert closed_segments_intersect(Point(0, 0), Point(1, 0), Point(1, 0), Point(2, 5))
    # T-touch
    assert closed_segments_intersect(Point(0, 0), Point(4, 0), Point(2, 0), Point(2, 3))
    # collinear overlap
    assert closed_segments_intersect(Point(0, 0), Point(3, 0), Point(1, 0), Point(5, 0))
    # collinear disjoint
    assert not closed_segments_intersect(Point(0, 0), Point(1, 0), Point(2, 0), Point(3, 0))
    # plainly disjoint
    assert not closed_segments_intersect(Point(0, 0), Point(1, 1), Point(3, 0), Point(4, 1))


def test_strict_convexity():
    square = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]
    assert is_strictly_convex_ccw(square)
    assert not is_strictly_convex_ccw(list(reversed(square)))  # cw
    assert is_strictly_convex_polygon(list(reversed(square)))  # either orientation
    collinear = [Point(0, 0), Point(1, 0), Point(2, 0), Point(1, 1)]
    assert not is_strictly_convex_ccw(collinear)
    assert not is_strictly_convex_polygon(collinear)
    # non-convex quad
    dart = [Point(0, 0), Point(4, 0), Point(1, 1), Point(0, 4)]
    assert not is_strictly_convex_polygon(dart)


def test_centroid_and_errors():
    assert centroid([Point(0, 0), Point(2, 0), Point(1, 3)]) == Point(1, 1)
    with pytest.raises(ValidationError):
        centroid([])


def test_scale_to_integers_preserves_order_type():
    pts = [Point("1/3", "1/7"), Point("2/3", 0), Point(1, "5/21")]
    xs, ys = scale_to_integers(pts)
    assert all(isinstance(v, int) for v in xs + ys)
    # signs of all orientation determinants survive the scaling
    def int_orient(i, j, k):
        return (
            (xs[j] - xs[i]) * (ys[k] - ys[i]) - (ys[j] - ys[i]) * (xs[k] - xs[i])
        )
    s = int_orient(0, 1, 2)
    o = orientation(pts[0], pts[1], pts[2])
    assert (s > 0) - (s < 0) == o


def test_convex_hull_and_containment():
    pts = [Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4), Point(2, 2), Point(1, 1)]
    hull = convex_hull(pts)
    assert len(hull) == 4
    assert is_strictly_convex_ccw(hull)
    assert point_in_convex_polygon(hull, Point(2, 2))
    assert point_in_convex_polygon(hull, Point(0, 0))  # closed containment
    assert not point_in_convex_polygon(hull, Point(5, 5))
    # degenerate hulls
    seg = convex_hull([Point(0, 0), Point(1, 1), Point(2, 2)])
    assert len(seg) == 2
    assert point_in_convex_polygon(seg, Point(1, 1))
    assert not point_in_convex_polygon(seg, Point(1, 0))

"""Exact rational plane geometry.

Coordinates are `fractions.Fraction`; every predicate is decided by the sign
of an exact determinant. There is no tolerance parameter anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ValidationError

Rational = Union[int, str, Fraction]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # Floats are accepted but converted through their exact binary value;
        # callers that want decimal semantics should pass strings.
        return Fraction(value)
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    """A plane point with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __init__(self, x: Rational, y: Rational):
        object.__setattr__(self, "x", _frac(x))
        object.__setattr__(self, "y", _frac(y))

    def __iter__(self):
        return iter((self.x, self.y))

    def translated(self, dx: Rational, dy: Rational) -> "Point":
        return Point(self.x + _frac(dx), self.y + _frac(dy))

    def as_pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """((x_num, x_den), (y_num, y_den)) for the JSON interchange format."""
        return (
            (self.x.numerator, self.x.denominator),
            (self.y.numerator, self.y.denominator),
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Point({self.x}, {self.y})"


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of (a, b, c): +1 left turn, -1 right, 0 collinear."""
    det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def collinear(a: Point, b: Point, c: Point) -> bool:
    return orientation(a, b, c) == 0


def on_closed_segment(a: Point, b: Point, p: Point) -> bool:
    """True iff p lies on the closed segment ab (endpoints included)."""
    if orientation(a, b, p) != 0:
        return False
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def on_open_segment(a: Point, b: Point, p: Point) -> bool:
    """True iff p lies strictly between a and b."""
    return on_closed_segment(a, b, p) and p != a and p != b


def closed_segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff closed segments ab and cd share at least one point."""
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if o1 != o2 and o3 != o4 and o1 * o2 <= 0 and o3 * o4 <= 0:
        return True
    if o1 == 0 and on_closed_segment(a, b, c):
        return True
    if o2 == 0 and on_closed_segment(a, b, d):
        return True
    if o3 == 0 and on_closed_segment(c, d, a):
        return True
    if o4 == 0 and on_closed_segment(c, d, b):
        return True
    return False


def is_strictly_convex_ccw(points: Sequence[Point]) -> bool:
    """All cyclically consecutive triples make strict left turns.

    This is the boundary-order convention used for convex point sets: the
    points trace a strictly convex polygon counterclockwise.
    """
    n = len(points)
    if n < 3:
        return False
    if len({(p.x, p.y) for p in points}) != n:
        return False
    for i in range(n):
        if orientation(points[i], points[(i + 1) % n], points[(i + 2) % n]) != 1:
            return False
    return True


def is_strictly_convex_polygon(points: Sequence[Point]) -> bool:
    """Strictly convex in the given cyclic order, either orientation."""
    n = len(points)
    if n < 3:
        return False
    if len({(p.x, p.y) for p in points}) != n:
        return False
    signs = {
        orientation(points[i], points[(i + 1) % n], points[(i + 2) % n])
        for i in range(n)
    }
    return signs == {1} or signs == {-1}


def centroid(points: Iterable[Point]) -> Point:
    pts = list(points)
    if not pts:
        raise ValidationError("centroid of an empty point collection")
    n = len(pts)
    return Point(sum(p.x for p in pts) / n, sum(p.y for p in pts) / n)


def scale_to_integers(points: Sequence[Point]) -> tuple[list[int], list[int]]:
    """Clear denominators uniformly; signs of all determinants are preserved.

    Returns integer x and y coordinate lists for the kernel layer.
    """
    denom = 1
    for p in points:
        denom = denom * p.x.denominator // math.gcd(denom, p.x.denominator)
        denom = denom * p.y.denominator // math.gcd(denom, p.y.denominator)
    xs = [int(p.x * denom) for p in points]
    ys = [int(p.y * denom) for p in points]
    return xs, ys


def convex_hull(points: Sequence[Point]) -> list[Point]:
    """Andrew's monotone chain; returns hull vertices in ccw order.

    Collinear boundary points are dropped. Degenerate inputs (all points
    collinear) return the two extremes, or a single point.
    """
    pts = sorted(set((p.x, p.y) for p in points))
    pts = [Point(x, y) for x, y in pts]
    if len(pts) <= 2:
        return pts

    def half(chain_pts):
        chain: list[Point] = []
        for p in chain_pts:
            while len(chain) >= 2 and orientation(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) >= 3 else pts[:1] if len(set(pts)) == 1 else [pts[0], pts[-1]]


def point_in_convex_polygon(poly: Sequence[Point], p: Point) -> bool:
    """Closed containment test for a ccw convex polygon."""
    if len(poly) == 1:
        return p == poly[0]
    if len(poly) == 2:
        return on_closed_segment(poly[0], poly[1], p)
    for i in range(len(poly)):
        if orientation(poly[i], poly[(i + 1) % len(poly)], p) < 0:
            return False
    return True

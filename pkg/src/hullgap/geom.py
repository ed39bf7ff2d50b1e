"""Planar primitives over exact rationals.

Orientation convention, used everywhere in the package:

    orient(p, q, r) = sign((q - p) x (r - p))

+1 is a left (counterclockwise) turn, 0 collinear, -1 a right turn. When q is
to the right of p, +1 means r lies strictly above the directed line p->q.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .numeric import RationalLike, as_rational, rat_render, sign


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: RationalLike, y: RationalLike) -> "Point":
        return cls(as_rational(x), as_rational(y))

    def __str__(self) -> str:
        return f"({rat_render(self.x)},{rat_render(self.y)})"


class PointClass(enum.Enum):
    EXTREME = "ExtremeVertex"
    BOUNDARY = "BoundaryNonExtreme"
    INTERIOR = "Interior"


class TriangleLocation(enum.Enum):
    STRICTLY_INSIDE = "StrictlyInside"
    ON_BOUNDARY = "OnBoundary"
    OUTSIDE = "Outside"


def cross(p: Point, q: Point, r: Point) -> Fraction:
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orient(p: Point, q: Point, r: Point) -> int:
    return sign(cross(p, q, r))


def point_in_triangle(t: Point, a: Point, b: Point, c: Point) -> TriangleLocation:
    """Locate ``t`` against triangle ``abc`` (either winding).

    A degenerate triangle has no interior, so the answer is then either
    ON_BOUNDARY (t on the segment hull of the corners) or OUTSIDE.
    """
    o = orient(a, b, c)
    if o == 0:
        return _on_degenerate_triangle(t, a, b, c)
    s1 = orient(a, b, t) * o
    s2 = orient(b, c, t) * o
    s3 = orient(c, a, t) * o
    if s1 > 0 and s2 > 0 and s3 > 0:
        return TriangleLocation.STRICTLY_INSIDE
    if s1 >= 0 and s2 >= 0 and s3 >= 0:
        return TriangleLocation.ON_BOUNDARY
    return TriangleLocation.OUTSIDE


def _on_segment(t: Point, a: Point, b: Point) -> bool:
    if orient(a, b, t) != 0:
        return False
    return min(a, b) <= t <= max(a, b)


def _on_degenerate_triangle(t, a, b, c) -> TriangleLocation:
    if _on_segment(t, a, b) or _on_segment(t, b, c) or _on_segment(t, c, a):
        return TriangleLocation.ON_BOUNDARY
    return TriangleLocation.OUTSIDE


@dataclass(frozen=True)
class Line:
    """Line through two distinct anchors, directed p -> q."""

    p: Point
    q: Point

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("line anchors must be distinct")

    def side(self, r: Point) -> int:
        return orient(self.p, self.q, r)

    def contains(self, r: Point) -> bool:
        return self.side(r) == 0

    @property
    def slope(self) -> Fraction:
        run = self.q.x - self.p.x
        if run == 0:
            raise ZeroDivisionError("vertical line has no slope")
        return (self.q.y - self.p.y) / run

    @property
    def intercept(self) -> Fraction:
        return self.p.y - self.slope * self.p.x

    def y_at(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept


def outer_point(x: Fraction) -> Point:
    """Lift onto the outer parabola y = x^2."""
    return Point(x, x * x)


def inner_point(x: Fraction, eps: Fraction) -> Point:
    """Point on the inner parabola y = x^2 + eps^2/4."""
    return Point(x, x * x + eps * eps / 4)


def tangent_line_at(a: RationalLike, eps: RationalLike) -> Line:
    """The chord of y = x^2 over [a, a + eps].

    It touches the inner parabola y = x^2 + eps^2/4 exactly once, at
    x = a + eps/2, with slope 2a + eps.
    """
    a = as_rational(a)
    eps = as_rational(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {rat_render(eps)}")
    return Line(outer_point(a), outer_point(a + eps))


def inner_contact(line: Line, eps: Fraction):
    """Discriminant and root of (x^2 + eps^2/4) - line_y(x).

    Returns ``(discriminant, vertex_x)``; tangency means the discriminant is 0
    and the double root sits at ``vertex_x``.
    """
    m = line.slope
    c = eps * eps / 4 - line.intercept
    return m * m - 4 * c, m / 2

"""Exact convex hulls and hull-based deciders for epsilon-closeness."""
from .geom import Line, Point, PointClass, TriangleLocation, orient, point_in_triangle, tangent_line_at
from .hull import (
    HullReport,
    any_point_inside,
    compute_hull,
    distinct_and_convex_position,
    extreme_oracle,
    in_convex_position,
)
from .numeric import rat_parse, rat_render
from .reductions import (
    Construction,
    Instance,
    build_construction,
    decide_eps_closeness_via_hull,
    decide_strict_closeness_via_hull,
    decide_weak_closeness_via_convex_position,
    perturb,
    sort_via_hull,
    verify_claims,
)

__version__ = "0.1.0"

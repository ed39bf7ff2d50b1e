"""Deciding closeness questions on a multiset of rationals with hull queries.

Each value a is lifted to L = (a, a^2) on y = x^2 and a companion
T = (a + eps/2, (a + eps/2)^2 + eps^2/4) on y = x^2 + eps^2/4. T sits on the
chord from L to R = (a + eps, (a + eps)^2), and that chord is tangent to the
inner parabola at T. So T drops off the hull boundary exactly when some
other value lands strictly inside (a, a + eps), and is still on the boundary
(but no longer a vertex) when a value lands on a + eps.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import geom
from .geom import Line, Point, PointClass, TriangleLocation, inner_contact, point_in_triangle
from .hull import HullReport, compute_hull
from .numeric import RationalLike, as_rational, rat_render


@dataclass(frozen=True)
class Instance:
    values: tuple[Fraction, ...]
    eps: Fraction

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_rational(v) for v in self.values))
        object.__setattr__(self, "eps", as_rational(self.eps))
        if not self.values:
            raise ValueError("instance needs at least one value")
        if self.eps <= 0:
            raise ValueError(f"eps must be positive, got {rat_render(self.eps)}")

    @classmethod
    def of(cls, values: Iterable[RationalLike], eps: RationalLike) -> "Instance":
        return cls(tuple(values), eps)

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Construction:
    source: Instance
    L: tuple[Point, ...]
    T: tuple[Point, ...]
    R: tuple[Point, ...]
    tangents: tuple[Line, ...]

    @property
    def points(self) -> tuple[Point, ...]:
        """S = L then T, in index order."""
        return self.L + self.T

    def label(self, k: int) -> str:
        """Name of the k-th point of S, 1-based: L1..Ln, T1..Tn."""
        n = self.source.n
        return f"L{k + 1}" if k < n else f"T{k - n + 1}"


def build_construction(inst: Instance) -> Construction:
    eps = inst.eps
    half = eps / 2
    L = tuple(geom.outer_point(a) for a in inst.values)
    T = tuple(geom.inner_point(a + half, eps) for a in inst.values)
    R = tuple(geom.outer_point(a + eps) for a in inst.values)
    tangents = tuple(Line(l, r) for l, r in zip(L, R))
    return Construction(inst, L, T, R, tangents)


def _hidden_t(report: HullReport, n: int, cls: PointClass) -> list[int]:
    return [i - n for i in report.indices_of(cls) if i >= n]


def strict_closeness_witness(inst: Instance) -> tuple[int, int] | None:
    """Pair (i, j), 0-based, with 0 < a_j - a_i < eps, found through the hull.

    The hull decides; the partner j of the hidden T_i is then read off by a
    linear scan.
    """
    report = compute_hull(build_construction(inst).points)
    hidden = _hidden_t(report, inst.n, PointClass.INTERIOR)
    if not hidden:
        return None
    i = hidden[0]
    a, eps = inst.values[i], inst.eps
    j = next(j for j, b in enumerate(inst.values) if a < b < a + eps)
    return i, j


def _hull_of_s(inst: Instance, reports: list | None) -> HullReport:
    report = compute_hull(build_construction(inst).points)
    if reports is not None:
        reports.append(report)
    return report


def decide_strict_closeness_via_hull(inst: Instance, reports: list | None = None) -> bool:
    """Any point of S(A, eps) strictly inside its hull.

    Pass a list as ``reports`` to collect the hull reports (predicate counts).
    """
    return PointClass.INTERIOR in _hull_of_s(inst, reports).classes


def perturb(inst: Instance) -> Instance:
    """Shift a_i by eps*i/(2n), i = 1..n in stored order, and halve eps."""
    n = inst.n
    step = inst.eps / (2 * n)
    return Instance(tuple(a + step * i for i, a in enumerate(inst.values, start=1)), inst.eps / 2)


def eps_closeness_witness(inst: Instance) -> tuple[int, int] | None:
    """Pair with 0 <= a_j - a_i < eps: strict phase first, then duplicates."""
    pair = strict_closeness_witness(inst)
    if pair is not None:
        return pair
    pair = strict_closeness_witness(perturb(inst))
    if pair is None:
        return None
    # with no strict pair present, a hit on the perturbed values is a duplicate
    return tuple(sorted(pair))


def decide_eps_closeness_via_hull(inst: Instance, reports: list | None = None) -> bool:
    if decide_strict_closeness_via_hull(inst, reports):
        return True
    return decide_strict_closeness_via_hull(perturb(inst), reports)


def weak_closeness_witness(inst: Instance) -> tuple[int, int] | None:
    """Pair with 0 < a_j - a_i <= eps, from a T point that is not a vertex."""
    report = compute_hull(build_construction(inst).points)
    for i in range(inst.n):
        if report.classes[inst.n + i] is not PointClass.EXTREME:
            a, eps = inst.values[i], inst.eps
            j = next(j for j, b in enumerate(inst.values) if a < b <= a + eps)
            return i, j
    return None


def decide_weak_closeness_via_convex_position(inst: Instance, reports: list | None = None) -> bool:
    classes = _hull_of_s(inst, reports).classes
    return not all(c is PointClass.EXTREME for c in classes)


def sort_via_hull(values: Sequence[RationalLike]) -> list[Fraction]:
    """Sort distinct values by walking the hull of their parabola lift."""
    values = [as_rational(v) for v in values]
    if not values:
        raise ValueError("nothing to sort")
    if len(set(values)) != len(values):
        raise ValueError("sort_via_hull needs pairwise distinct values")
    report = compute_hull([geom.outer_point(a) for a in values])
    cycle = report.hull_vertices
    if len(cycle) != len(values):
        raise AssertionError("lifted points must all be hull vertices")
    start = min(range(len(cycle)), key=lambda k: cycle[k])
    return [cycle[(start + k) % len(cycle)].x for k in range(len(cycle))]


@dataclass
class CheckResult:
    passed: bool
    witnesses: list = field(default_factory=list)


@dataclass
class ClaimReport:
    interior: list[int]
    expected_interior: list[int]
    checks: dict[str, CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())


def tangency_failures(a: Fraction, eps: Fraction, line: Line) -> list[str]:
    """Empty when the chord at a really is tangent to the inner parabola."""
    out = []
    t = geom.inner_point(a + eps / 2, eps)
    if not line.contains(t):
        out.append("T off the chord")
    if line.slope != 2 * a + eps:
        out.append(f"slope {rat_render(line.slope)} != {rat_render(2 * a + eps)}")
    disc, root = inner_contact(line, eps)
    if disc != 0:
        out.append(f"discriminant {rat_render(disc)} != 0")
    if root != a + eps / 2:
        out.append(f"contact x {rat_render(root)} != {rat_render(a + eps / 2)}")
    return out


def verify_claims(inst: Instance) -> ClaimReport:
    """Check the hull picture of S(A, eps) against what the construction predicts.

    interior_set: Interior points are exactly the T_i with some a_i < a_j < a_i + eps.
    no_interior_L: no L point is Interior.
    triangles: T_i is strictly inside L_i L_j T_j for every such pair.
    tangency: each chord L_i R_i touches the inner parabola at T_i only.
    """
    con = build_construction(inst)
    n, a, eps = inst.n, inst.values, inst.eps
    report = compute_hull(con.points)
    interior = report.indices_of(PointClass.INTERIOR)
    pairs = [(i, j) for i in range(n) for j in range(n) if a[i] < a[j] < a[i] + eps]
    expected = sorted({n + i for i, _ in pairs})

    checks = {}
    checks["interior_set"] = CheckResult(
        interior == expected,
        [con.label(k) for k in sorted(set(interior) ^ set(expected))],
    )
    bad_l = [con.label(k) for k in interior if k < n]
    checks["no_interior_L"] = CheckResult(not bad_l, bad_l)
    bad_tri = [
        (i + 1, j + 1)
        for i, j in pairs
        if point_in_triangle(con.T[i], con.L[i], con.L[j], con.T[j]) is not TriangleLocation.STRICTLY_INSIDE
    ]
    checks["triangles"] = CheckResult(not bad_tri, bad_tri)
    bad_tan = []
    for i in range(n):
        problems = tangency_failures(a[i], eps, con.tangents[i])
        if problems:
            bad_tan.append((i + 1, problems))
    checks["tangency"] = CheckResult(not bad_tan, bad_tan)
    return ClaimReport([k - n for k in interior if k >= n], [k - n for k in expected], checks)

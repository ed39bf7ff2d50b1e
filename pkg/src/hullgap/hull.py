"""Convex hull with a three-way label for every input point.

Points are sorted lexicographically, collapsed by location, and swept by
Andrew's monotone chain with collinear points popped, so the returned cycle is
strictly convex. A second sweep labels each remaining location as lying on a
hull edge or strictly inside.

Labels are location based: every copy of a hull vertex is EXTREME.
"""
from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _accel
from ._hull_kernels import (
    BOUNDARY,
    EXTREME,
    INTERIOR,
    cone_extreme,
    cone_extreme_numpy,
    monotone_chain,
)
from .geom import Point, PointClass
from .numeric import integer_grid

_LABELS = {EXTREME: PointClass.EXTREME, BOUNDARY: PointClass.BOUNDARY, INTERIOR: PointClass.INTERIOR}

# mutation switch for verifying that the test suites notice a broken hull
_KEEP_COLLINEAR = contextvars.ContextVar("hullgap_keep_collinear", default=False)


@contextlib.contextmanager
def keep_collinear_mutant(enabled: bool = True):
    """Deliberately break the hull: collinear points survive as vertices."""
    token = _KEEP_COLLINEAR.set(enabled)
    try:
        yield
    finally:
        _KEEP_COLLINEAR.reset(token)


@dataclass(frozen=True)
class HullReport:
    points: tuple[Point, ...]
    hull_vertices: tuple[Point, ...]
    classes: tuple[PointClass, ...]
    orient_calls: int
    compare_calls: int
    hull_indices: tuple[int, ...] = ()

    @property
    def predicate_calls(self) -> int:
        """All sign tests: orientations plus sort comparisons."""
        return self.orient_calls + self.compare_calls

    def indices_of(self, cls: PointClass) -> list[int]:
        return [i for i, c in enumerate(self.classes) if c is cls]

    def first(self, cls: PointClass) -> int | None:
        for i, c in enumerate(self.classes):
            if c is cls:
                return i
        return None


def _grid(points: Sequence[Point]):
    X, Y, fits = integer_grid([p.x for p in points], [p.y for p in points])
    return X, Y, fits


def compute_hull(points: Sequence[Point]) -> HullReport:
    points = tuple(points)
    if not points:
        raise ValueError("convex hull of an empty point set")
    X, Y, fits = _grid(points)
    fn = monotone_chain.pick(fits)
    if fn is monotone_chain.py and fits:
        X, Y = X.tolist(), Y.tolist()
    _order, uniq, loc, labels, cycle, compares, orients = fn(X, Y, _KEEP_COLLINEAR.get())
    classes = tuple(_LABELS[int(labels[loc[i]])] for i in range(len(points)))
    hull_idx = tuple(int(uniq[k]) for k in cycle)
    return HullReport(
        points=points,
        hull_vertices=tuple(points[i] for i in hull_idx),
        classes=classes,
        orient_calls=int(orients),
        compare_calls=int(compares),
        hull_indices=hull_idx,
    )


def any_point_inside(points: Sequence[Point]) -> bool:
    return PointClass.INTERIOR in compute_hull(points).classes


def in_convex_position(points: Sequence[Point]) -> bool:
    """Every input location is a hull vertex; duplicates are tolerated."""
    return all(c is PointClass.EXTREME for c in compute_hull(points).classes)


def distinct_and_convex_position(points: Sequence[Point]) -> bool:
    """Stricter reading: points pairwise distinct and all hull vertices."""
    points = tuple(points)
    return len(set(points)) == len(points) and in_convex_position(points)


def _cone(points: Sequence[Point], targets: Sequence[int]) -> np.ndarray:
    X, Y, fits = _grid(points)
    targets = np.asarray(targets, dtype=np.int64)
    if fits and _accel.numba_enabled():
        return cone_extreme.jit(X, Y, targets)
    if not fits:
        X = np.array(X, dtype=object)
        Y = np.array(Y, dtype=object)
    return cone_extreme_numpy(X, Y, targets)


def extreme_oracle(points: Sequence[Point], index: int) -> bool:
    """Is ``points[index]`` the only location on some supporting line?

    Decided by enumerating candidate directions q - p; never builds a hull.
    """
    points = tuple(points)
    if not points:
        raise ValueError("empty point set")
    if not 0 <= index < len(points):
        raise ValueError(f"point index {index} out of range for {len(points)} points")
    return bool(_cone(points, [index])[0])


def extreme_oracle_all(points: Sequence[Point]) -> list[bool]:
    points = tuple(points)
    if not points:
        raise ValueError("empty point set")
    return [bool(v) for v in _cone(points, range(len(points)))]

"""Brute-force references for the test and verify suites.

Nothing here sorts, builds chains, or imports the hull or reduction modules.
Disagreement with those modules is a bug in them until shown otherwise.
"""
from __future__ import annotations

import enum
import math
from itertools import permutations
from typing import Sequence

import numpy as np

from . import _accel
from ._accel import kernel
from .geom import Point, PointClass
from .numeric import integer_grid


class Mode(enum.Enum):
    STRICT_OPEN = "StrictOpen"      # 0 < d < eps
    HALF_OPEN = "HalfOpen"          # 0 <= d < eps
    STRICT_CLOSED = "StrictClosed"  # 0 < d <= eps


def _hit(d, eps, mode: Mode) -> bool:
    if mode is Mode.STRICT_OPEN:
        return 0 < d < eps
    if mode is Mode.HALF_OPEN:
        return 0 <= d < eps
    return 0 < d <= eps


def _common_scale(values, eps):
    den = math.lcm(eps.denominator, *(v.denominator for v in values))
    return [v.numerator * (den // v.denominator) for v in values], eps.numerator * (den // eps.denominator)


def brute_closeness_pair(values, eps, mode: Mode):
    """First ordered pair (i, j), i != j, with a_j - a_i in the mode's range.

    Values are rescaled to integers first; the scan itself is every ordered pair.
    """
    ints, e = _common_scale(values, eps)
    for i, j in permutations(range(len(ints)), 2):
        if _hit(ints[j] - ints[i], e, mode):
            return i, j
    return None


def brute_closeness(inst, mode: Mode) -> bool:
    return brute_closeness_pair(inst.values, inst.eps, mode) is not None


def hidden_t_indices(values, eps) -> set[int]:
    """{i : some a_j with a_i < a_j < a_i + eps}, by exhaustive pairing."""
    ints, e = _common_scale(values, eps)
    return {i for i, ai in enumerate(ints) if any(ai < aj < ai + e for aj in ints)}


# label codes shared by both backends below
_EXTREME, _BOUNDARY, _INTERIOR = 0, 1, 2
_CODES = {_EXTREME: PointClass.EXTREME, _BOUNDARY: PointClass.BOUNDARY, _INTERIOR: PointClass.INTERIOR}


@kernel
def _classify_loops(X, Y):
    m = len(X)
    labels = np.full(m, _INTERIOR, np.int64)
    if m == 1:
        labels[0] = _EXTREME
        return labels
    boundary = np.zeros(m, np.bool_)
    # a directed pair (i, j) is supporting when no point is strictly right of it
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            ok = True
            for k in range(m):
                c = (X[j] - X[i]) * (Y[k] - Y[i]) - (Y[j] - Y[i]) * (X[k] - X[i])
                if c < 0:
                    ok = False
                    break
            if ok:
                for k in range(m):
                    c = (X[j] - X[i]) * (Y[k] - Y[i]) - (Y[j] - Y[i]) * (X[k] - X[i])
                    if c == 0:
                        boundary[k] = True
    for k in range(m):
        if not boundary[k]:
            continue
        between = False
        for i in range(m):
            if between:
                break
            for j in range(m):
                if i == k or j == k or i == j:
                    continue
                c = (X[j] - X[i]) * (Y[k] - Y[i]) - (Y[j] - Y[i]) * (X[k] - X[i])
                if c != 0:
                    continue
                lo = X[i] < X[k] or (X[i] == X[k] and Y[i] < Y[k])
                hi = X[k] < X[j] or (X[k] == X[j] and Y[k] < Y[j])
                if lo and hi:
                    between = True
                    break
        labels[k] = _BOUNDARY if between else _EXTREME
    return labels


def _classify_numpy(X, Y):
    m = len(X)
    if m == 1:
        return np.array([_EXTREME])
    dx = X[None, :] - X[:, None]          # dx[i, j] = X[j] - X[i]
    dy = Y[None, :] - Y[:, None]
    # c[i, j, k] = cross(P_j - P_i, P_k - P_i)
    c = dx[:, :, None] * dy[:, None, :] - dy[:, :, None] * dx[:, None, :]
    offdiag = ~np.eye(m, dtype=bool)
    supporting = (c >= 0).all(axis=2) & offdiag
    on_support = (c == 0) & supporting[:, :, None]
    boundary = on_support.any(axis=(0, 1))
    less = (X[:, None] < X[None, :]) | ((X[:, None] == X[None, :]) & (Y[:, None] < Y[None, :]))
    # strictly between i < k < j on a common line
    between = (c == 0) & less[:, None, :] & less.T[None, :, :]
    interior_of_segment = between.any(axis=(0, 1))
    labels = np.full(m, _INTERIOR)
    labels[boundary & interior_of_segment] = _BOUNDARY
    labels[boundary & ~interior_of_segment] = _EXTREME
    return labels


def brute_point_classification(points: Sequence[Point]) -> list[PointClass]:
    """Label every point by exhaustive supporting-line and segment tests, O(n^3)."""
    points = list(points)
    if not points:
        raise ValueError("empty point set")
    distinct: dict[Point, int] = {}
    for p in points:
        distinct.setdefault(p, len(distinct))
    locs = list(distinct)
    X, Y, fits = integer_grid([p.x for p in locs], [p.y for p in locs])
    if fits and _accel.numba_enabled():
        labels = _classify_loops.jit(X, Y)
    else:
        if not fits:
            X = np.array(X, dtype=object)
            Y = np.array(Y, dtype=object)
        labels = _classify_numpy(X, Y)
    return [_CODES[int(labels[distinct[p]])] for p in points]

"""Loop kernels behind :mod:`hullgap.hull`.

Inputs are integer coordinate arrays from :func:`hullgap.numeric.integer_grid`.
The same source runs compiled (int64) or interpreted (Python ints), so counts
and labels are identical across backends.
"""
import numpy as np

from ._accel import kernel

EXTREME = 0
BOUNDARY = 1
INTERIOR = 2


@kernel
def monotone_chain(X, Y, keep_collinear):
    n = len(X)

    # bottom-up merge sort of indices by (x, y); stable, comparisons counted
    order = np.arange(n)
    buf = np.empty(n, np.int64)
    compares = 0
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i = lo
            j = mid
            k = lo
            while i < mid and j < hi:
                a = order[i]
                b = order[j]
                compares += 1
                if X[b] < X[a] or (X[b] == X[a] and Y[b] < Y[a]):
                    buf[k] = b
                    j += 1
                else:
                    buf[k] = a
                    i += 1
                k += 1
            while i < mid:
                buf[k] = order[i]
                i += 1
                k += 1
            while j < hi:
                buf[k] = order[j]
                j += 1
                k += 1
        order, buf = buf, order
        width *= 2

    # collapse coincident points; loc maps input index -> distinct rank
    uniq = np.empty(n, np.int64)
    loc = np.empty(n, np.int64)
    m = 0
    for t in range(n):
        idx = order[t]
        if m > 0 and X[idx] == X[uniq[m - 1]] and Y[idx] == Y[uniq[m - 1]]:
            loc[idx] = m - 1
        else:
            uniq[m] = idx
            loc[idx] = m
            m += 1

    orients = 0
    lower = np.empty(m, np.int64)
    nl = 0
    for k in range(m):
        while nl >= 2:
            p = uniq[lower[nl - 2]]
            q = uniq[lower[nl - 1]]
            r = uniq[k]
            c = (X[q] - X[p]) * (Y[r] - Y[p]) - (Y[q] - Y[p]) * (X[r] - X[p])
            orients += 1
            if c < 0 or (c == 0 and not keep_collinear):
                nl -= 1
            else:
                break
        lower[nl] = k
        nl += 1

    upper = np.empty(m, np.int64)
    nu = 0
    for k in range(m - 1, -1, -1):
        while nu >= 2:
            p = uniq[upper[nu - 2]]
            q = uniq[upper[nu - 1]]
            r = uniq[k]
            c = (X[q] - X[p]) * (Y[r] - Y[p]) - (Y[q] - Y[p]) * (X[r] - X[p])
            orients += 1
            if c < 0 or (c == 0 and not keep_collinear):
                nu -= 1
            else:
                break
        upper[nu] = k
        nu += 1

    labels = np.full(m, INTERIOR, np.int64)
    if m == 1:
        cycle = np.zeros(1, np.int64)
        labels[0] = EXTREME
        return order, uniq[:m], loc, labels, cycle, compares, orients

    cycle = np.empty(nl + nu - 2, np.int64)
    h = 0
    for t in range(nl - 1):
        cycle[h] = lower[t]
        labels[lower[t]] = EXTREME
        h += 1
    for t in range(nu - 1):
        cycle[h] = upper[t]
        labels[upper[t]] = EXTREME
        h += 1

    # every non-vertex rank lies strictly between lower[j] and lower[j + 1]
    # and strictly between upper[u] and upper[u - 1]
    j = 0
    u = nu - 1
    for k in range(m):
        if labels[k] == EXTREME:
            continue
        while lower[j + 1] < k:
            j += 1
        while upper[u - 1] < k:
            u -= 1
        p = uniq[lower[j]]
        q = uniq[lower[j + 1]]
        r = uniq[k]
        c_lo = (X[q] - X[p]) * (Y[r] - Y[p]) - (Y[q] - Y[p]) * (X[r] - X[p])
        p = uniq[upper[u - 1]]
        q = uniq[upper[u]]
        c_up = (X[q] - X[p]) * (Y[r] - Y[p]) - (Y[q] - Y[p]) * (X[r] - X[p])
        orients += 2
        if c_lo == 0 or c_up == 0:
            labels[k] = BOUNDARY
    return order, uniq[:m], loc, labels, cycle, compares, orients


@kernel
def cone_extreme(X, Y, targets):
    """For each target p: do the vectors q - p (q != p) fit in an open half-plane?

    Such a half-plane exists iff some vector v0 has every other vector
    strictly counterclockwise of it (within a half-turn) or pointing the same
    way. No hull is built.
    """
    n = len(X)
    out = np.zeros(len(targets), np.bool_)
    for t in range(len(targets)):
        p = targets[t]
        seen_other = False
        found = False
        for a in range(n):
            ax = X[a] - X[p]
            ay = Y[a] - Y[p]
            if ax == 0 and ay == 0:
                continue
            seen_other = True
            ok = True
            for b in range(n):
                bx = X[b] - X[p]
                by = Y[b] - Y[p]
                if bx == 0 and by == 0:
                    continue
                c = ax * by - ay * bx
                if c < 0:
                    ok = False
                    break
                if c == 0:
                    same = ((ax > 0) == (bx > 0) and (ax < 0) == (bx < 0)
                            and (ay > 0) == (by > 0) and (ay < 0) == (by < 0))
                    if not same:
                        ok = False
                        break
            if ok:
                found = True
                break
        out[t] = found or not seen_other
    return out


def cone_extreme_numpy(X, Y, targets):
    """Vectorized twin of :func:`cone_extreme` (int64 or object arrays)."""
    X = np.asarray(X)
    Y = np.asarray(Y)
    out = np.zeros(len(targets), dtype=bool)
    for t, p in enumerate(targets):
        vx = X - X[p]
        vy = Y - Y[p]
        keep = (vx != 0) | (vy != 0)
        vx = vx[keep]
        vy = vy[keep]
        if len(vx) == 0:
            out[t] = True
            continue
        c = vx[:, None] * vy[None, :] - vy[:, None] * vx[None, :]
        sx = (vx > 0).astype(np.int8) - (vx < 0).astype(np.int8)
        sy = (vy > 0).astype(np.int8) - (vy < 0).astype(np.int8)
        same = (sx[:, None] == sx[None, :]) & (sy[:, None] == sy[None, :])
        ok = ((c > 0) | ((c == 0) & same)).all(axis=1)
        out[t] = bool(ok.any())
    return out

"""Seeded instance and point-set generators.

Random rationals almost never hit the equalities that separate the strict,
half-open and closed closeness variants, so most generators draw from the
grid k * eps / 4 or from exact multiples of eps.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .geom import Point
from .reductions import Instance

EPS_CHOICES = (Fraction(1), Fraction(1, 3), Fraction(2), Fraction(5, 7), Fraction(3, 2))


def trial_rng(seed: int, index: int, tag: str = "") -> random.Random:
    """Independent stream per (seed, trial); reordering trials changes nothing."""
    return random.Random(f"{seed}:{tag}:{index}")


def random_eps(rng: random.Random) -> Fraction:
    if rng.random() < 0.8:
        return rng.choice(EPS_CHOICES)
    return Fraction(rng.randint(1, 40), rng.randint(1, 12))


def grid_values(rng: random.Random, n: int, eps: Fraction) -> list[Fraction]:
    if n <= 8 and rng.random() < 0.15:
        # gaps within 2**-90 of eps: beyond double precision, forces big-int paths
        base = eps * rng.randint(-3, 3)
        return [base + eps * rng.randint(0, 3) + rng.choice((-1, 0, 1)) * eps / 2 ** rng.randint(40, 90)
                for _ in range(n)]
    mode = rng.choice(("quarter", "lattice", "spread", "near", "quarter"))
    if mode == "quarter":
        span = rng.randint(max(1, n // 2), 6 * n + 2)
        return [eps * rng.randint(-span, span) / 4 for _ in range(n)]
    if mode == "lattice":
        span = rng.randint(max(1, n // 2), 2 * n + 2)
        return [eps * rng.randint(0, span) for _ in range(n)]
    if mode == "spread":
        # gaps of exactly eps, a bit more, or zero: few strict hits
        x = eps * rng.randint(-5, 5)
        out = []
        for _ in range(n):
            out.append(x)
            x += rng.choice((eps, eps, eps + eps / 8, 2 * eps, Fraction(0)))
        rng.shuffle(out)
        return out
    # lattice plus tiny nudges straddling the eps boundary
    span = rng.randint(1, 2 * n + 2)
    out = []
    for _ in range(n):
        v = eps * rng.randint(0, span)
        if rng.random() < 0.3:
            v += rng.choice((-1, 1)) * eps / 2 ** rng.randint(3, 9)
        out.append(v)
    return out


def random_instance(rng: random.Random, n_max: int) -> Instance:
    n = rng.randint(1, n_max)
    eps = random_eps(rng)
    return Instance(tuple(grid_values(rng, n, eps)), eps)


def instance_stream(count: int, n_max: int, seed: int):
    for t in range(count):
        yield random_instance(trial_rng(seed, t, "instance"), n_max)


def random_point_set(rng: random.Random, n_max: int) -> list[Point]:
    """Small-grid points with forced duplicates and collinear triples."""
    n = rng.randint(1, n_max)
    side = rng.choice((2, 3, 4, 6, 10, 50))
    den = rng.choice((1, 1, 2, 3))
    pts = [Point(Fraction(rng.randint(0, side), den), Fraction(rng.randint(0, side), den)) for _ in range(n)]
    extra = []
    for p in pts:
        roll = rng.random()
        if roll < 0.1:
            extra.append(p)
        elif roll < 0.2 and len(pts) > 1:
            q = rng.choice(pts)
            t = Fraction(rng.randint(1, 3), 4)
            extra.append(Point(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)))
    pts = (pts + extra)[:n_max]
    rng.shuffle(pts)
    return pts


def distinct_values(rng: random.Random, n_max: int) -> list[Fraction]:
    n = rng.randint(1, n_max)
    pool = set()
    while len(pool) < n:
        pool.add(Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 1000)))
    out = list(pool)
    rng.shuffle(out)
    return out


def bench_instance(family: str, n: int, seed: int = 0) -> Instance:
    rng = trial_rng(seed, n, family)
    eps = Fraction(1)
    if family == "uniform":
        values = [Fraction(rng.randrange(4 * n), 4) for _ in range(n)]
    elif family == "eps-spaced":
        values = [eps * i for i in range(1, n + 1)]
        rng.shuffle(values)
    elif family == "all-equal":
        values = [Fraction(7, 3)] * n
    elif family == "half-close":
        # pairs (2k*eps, 2k*eps + eps/2) for half the values, the rest eps apart
        half = n // 2
        values = [2 * eps * (k // 2) + (eps / 2 if k % 2 else 0) for k in range(half)]
        values += [eps * (n + 2 * k) for k in range(n - half)]
        rng.shuffle(values)
    else:
        raise ValueError(f"unknown bench family {family!r}")
    return Instance(tuple(values), eps)


BENCH_FAMILIES = ("uniform", "eps-spaced", "all-equal", "half-close")

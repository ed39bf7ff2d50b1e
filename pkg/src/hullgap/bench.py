"""Predicate-count growth curves for the hull-based deciders.

``orient_calls`` in a record is the number of sign tests the hull stage
evaluated: orientation tests plus the coordinate comparisons made while
sorting. Both are constant-degree sign tests, and together they are the
quantity expected to grow like n log n.
"""
from __future__ import annotations

import csv
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable

from .generators import BENCH_FAMILIES, bench_instance
from .reductions import (
    decide_eps_closeness_via_hull,
    decide_strict_closeness_via_hull,
    decide_weak_closeness_via_convex_position,
)

CSV_FIELDS = ("family", "n", "orient_calls", "wall_ns")

DECIDERS = {
    "strict": decide_strict_closeness_via_hull,
    "closeness": decide_eps_closeness_via_hull,
    "weak": decide_weak_closeness_via_convex_position,
}


@dataclass(frozen=True)
class BenchRecord:
    family: str
    n: int
    orient_calls: int
    wall_ns: int
    answer: bool = field(default=False, compare=False)


def bench_one(family: str, n: int, problem: str = "strict", seed: int = 0) -> BenchRecord:
    if n < 2:
        raise ValueError("bench sizes must be at least 2")
    inst = bench_instance(family, n, seed)
    decide = DECIDERS[problem]
    reports = []
    t0 = time.perf_counter_ns()
    answer = decide(inst, reports)
    wall = time.perf_counter_ns() - t0
    return BenchRecord(family, n, sum(r.predicate_calls for r in reports), wall, answer)


def run_bench(sizes: Iterable[int], families: Iterable[str] = BENCH_FAMILIES,
              problem: str = "strict", seed: int = 0) -> list[BenchRecord]:
    records = []
    # load compiled kernels before anything is timed
    decide_strict_closeness_via_hull(bench_instance("uniform", 4, seed))
    for family in families:
        if family not in BENCH_FAMILIES:
            raise ValueError(f"unknown family {family!r}; choose from {', '.join(BENCH_FAMILIES)}")
        for n in sizes:
            records.append(bench_one(family, n, problem, seed))
    records.sort(key=lambda r: (r.family, r.n))
    return records


def write_csv(records: Iterable[BenchRecord], path) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, fieldnames=CSV_FIELDS, extrasaction="ignore")
        w.writeheader()
        for r in records:
            w.writerow(asdict(r))


def read_csv(path) -> list[BenchRecord]:
    with Path(path).open(newline="", encoding="utf-8") as fh:
        return [
            BenchRecord(row["family"], int(row["n"]), int(row["orient_calls"]), int(row["wall_ns"]))
            for row in csv.DictReader(fh)
        ]

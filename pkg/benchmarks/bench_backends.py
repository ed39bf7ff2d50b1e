"""Compare the numba kernels against the interpreted / numpy fallback.

    python benchmarks/bench_backends.py [--repeat 3]

Both backends run in this process; HULLGAP_NUMBA is toggled between runs.
Labels and predicate counts are checked to be identical.
"""
import argparse
import os
import time

from hullgap.generators import bench_instance, random_point_set, trial_rng
from hullgap.hull import compute_hull, extreme_oracle_all
from hullgap.oracles import brute_point_classification
from hullgap.reductions import build_construction


def timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def run(label, fn, repeat):
    os.environ["HULLGAP_NUMBA"] = "1"
    fn()  # compile / load cache
    t_jit, r_jit = timed(fn, repeat)
    os.environ["HULLGAP_NUMBA"] = "0"
    t_py, r_py = timed(fn, repeat)
    os.environ.pop("HULLGAP_NUMBA")
    same = "same" if r_jit == r_py else "DIFFERENT"
    print(f"{label:<34} numba {t_jit * 1e3:9.2f} ms   fallback {t_py * 1e3:9.2f} ms"
          f"   x{t_py / max(t_jit, 1e-9):7.1f}   results {same}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    for n in (1024, 16384, 65536):
        pts = build_construction(bench_instance("uniform", n)).points

        def hull(pts=pts):
            r = compute_hull(pts)
            return r.classes, r.orient_calls, r.compare_calls

        run(f"compute_hull  |S|={2 * n}", hull, args.repeat)

    for n in (16, 32, 64):
        pts = build_construction(bench_instance("half-close", n)).points
        run(f"brute_classification |S|={2 * n}", lambda pts=pts: brute_point_classification(pts), args.repeat)
        run(f"extreme_oracle_all   |S|={2 * n}", lambda pts=pts: extreme_oracle_all(pts), args.repeat)

    sets = [random_point_set(trial_rng(0, t, "points"), 32) for t in range(200)]
    run("brute_classification 200 sets<=32", lambda: [brute_point_classification(p) for p in sets], 1)


if __name__ == "__main__":
    main()

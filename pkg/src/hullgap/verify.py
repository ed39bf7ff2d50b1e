"""Randomized property suite behind ``hullgap verify``.

Every trial draws from its own seeded stream, so results do not depend on
trial order. A failing case is shrunk greedily (drop one element at a time
while it still fails) before it is reported.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import generators as gen
from .geom import PointClass, orient, tangent_line_at
from .hull import compute_hull, extreme_oracle_all, keep_collinear_mutant
from .numeric import rat_render
from .oracles import Mode, brute_closeness, brute_point_classification, hidden_t_indices
from .reductions import (
    Instance,
    build_construction,
    decide_eps_closeness_via_hull,
    decide_strict_closeness_via_hull,
    decide_weak_closeness_via_convex_position,
    perturb,
    sort_via_hull,
    tangency_failures,
    verify_claims,
)


def render_instance(inst: Instance) -> str:
    return f"eps={rat_render(inst.eps)} A=[{', '.join(rat_render(v) for v in inst.values)}]"


def render_points(points) -> str:
    return "[" + ", ".join(str(p) for p in points) + "]"


# --- instance properties: return None on success, a short reason on failure


def prop_strict(inst):
    got = decide_strict_closeness_via_hull(inst)
    want = brute_closeness(inst, Mode.STRICT_OPEN)
    return None if got == want else f"hull says {got}, brute force says {want}"


def prop_eps(inst):
    got = decide_eps_closeness_via_hull(inst)
    want = brute_closeness(inst, Mode.HALF_OPEN)
    return None if got == want else f"hull says {got}, brute force says {want}"


def prop_weak(inst):
    got = decide_weak_closeness_via_convex_position(inst)
    want = brute_closeness(inst, Mode.STRICT_CLOSED)
    return None if got == want else f"hull says {got}, brute force says {want}"


def characterization_mismatch(inst: Instance):
    """Hull labels of S vs brute force, and Interior vs the predicted T set."""
    pts = build_construction(inst).points
    n = inst.n
    labels = compute_hull(pts).classes
    brute = brute_point_classification(pts)
    if list(labels) != brute:
        diff = [k for k in range(2 * n) if labels[k] is not brute[k]]
        return f"hull/brute labels differ at S indices {diff}"
    interior = {k for k, c in enumerate(labels) if c is PointClass.INTERIOR}
    predicted = {n + i for i in hidden_t_indices(inst.values, inst.eps)}
    if interior != predicted:
        return f"interior {sorted(interior)} != predicted {sorted(predicted)}"
    if any(k < n for k in interior):
        return "an L point is interior"
    return None


def prop_claims(inst):
    rep = verify_claims(inst)
    if rep.passed:
        return None
    return "; ".join(f"{k}: {v.witnesses}" for k, v in rep.checks.items() if not v.passed)


def prop_perturb(inst):
    p = perturb(inst)
    half = inst.eps / 2
    a, b = inst.values, p.values
    for i in range(inst.n):
        for j in range(inst.n):
            if not abs(abs(b[j] - b[i]) - abs(a[j] - a[i])) < half:
                return f"pair ({i + 1},{j + 1}) moved by at least eps/2"
    if p.eps != half:
        return "perturbed eps is not eps/2"
    return None


def prop_eps_permutation(inst, rng):
    vals = list(inst.values)
    rng.shuffle(vals)
    a = decide_eps_closeness_via_hull(inst)
    b = decide_eps_closeness_via_hull(Instance(tuple(vals), inst.eps))
    return None if a == b else "answer changed under shuffling"


# --- point-set properties


def hull_shape_problem(points, report) -> str | None:
    cyc = report.hull_vertices
    if len(set(cyc)) != len(cyc):
        return "repeated hull vertex"
    if len(cyc) >= 3:
        for k in range(len(cyc)):
            if orient(cyc[k - 1], cyc[k], cyc[(k + 1) % len(cyc)]) <= 0:
                return "hull cycle is not strictly convex counterclockwise"
    vertex_set = set(cyc)
    for p, c in zip(points, report.classes):
        if (c is PointClass.EXTREME) != (p in vertex_set):
            return f"{p} label {c.value} disagrees with vertex membership"
    return None


def prop_hull(points):
    report = compute_hull(points)
    problem = hull_shape_problem(points, report)
    if problem:
        return problem
    brute = brute_point_classification(points)
    if list(report.classes) != brute:
        k = next(k for k in range(len(points)) if report.classes[k] is not brute[k])
        return f"point {points[k]}: hull {report.classes[k].value}, brute force {brute[k].value}"
    cone = extreme_oracle_all(points)
    for k, c in enumerate(report.classes):
        if (c is PointClass.EXTREME) != cone[k]:
            return f"point {points[k]}: hull {c.value}, extreme oracle {cone[k]}"
    return None


def _shrink(items: list, fails: Callable[[list], bool]) -> list:
    items = list(items)
    progress = True
    while progress and len(items) > 1:
        progress = False
        for k in range(len(items)):
            trial = items[:k] + items[k + 1:]
            if fails(trial):
                items = trial
                progress = True
                break
    return items


@dataclass
class PropertyResult:
    name: str
    passed: int = 0
    failed: int = 0
    example: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _instance_property(name, check, trials, n_max, seed, uses_rng=False):
    res = PropertyResult(name)
    for t in range(trials):
        rng = gen.trial_rng(seed, t, "instance")
        inst = gen.random_instance(rng, n_max)
        call = (lambda I: check(I, gen.trial_rng(seed, t, "shuffle"))) if uses_rng else check
        reason = call(inst)
        if reason is None:
            res.passed += 1
            continue
        res.failed += 1
        if res.example is None:
            vals = _shrink(list(inst.values), lambda v: call(Instance(tuple(v), inst.eps)) is not None)
            small = Instance(tuple(vals), inst.eps)
            res.example = f"{render_instance(small)}: {call(small)}"
    return res


def _points_property(name, check, trials, n_max, seed):
    res = PropertyResult(name)
    for t in range(trials):
        pts = gen.random_point_set(gen.trial_rng(seed, t, "points"), max(1, n_max))
        reason = check(pts)
        if reason is None:
            res.passed += 1
            continue
        res.failed += 1
        if res.example is None:
            small = _shrink(pts, lambda p: check(p) is not None)
            res.example = f"{render_points(small)}: {check(small)}"
    return res


def _sort_property(trials, n_max, seed):
    res = PropertyResult("sort_via_hull")
    for t in range(trials):
        vals = gen.distinct_values(gen.trial_rng(seed, t, "sort"), max(1, 4 * n_max))
        if sort_via_hull(vals) == sorted(vals):
            res.passed += 1
        else:
            res.failed += 1
            res.example = res.example or f"A=[{', '.join(rat_render(v) for v in vals)}]"
    return res


def _tangency_property(trials, seed):
    res = PropertyResult("tangency")
    for t in range(trials):
        rng = gen.trial_rng(seed, t, "tangent")
        a = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        eps = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**4))
        problems = tangency_failures(a, eps, tangent_line_at(a, eps))
        if problems:
            res.failed += 1
            res.example = res.example or f"a={rat_render(a)} eps={rat_render(eps)}: {problems}"
        else:
            res.passed += 1
    return res


def run_suite(trials: int, n_max: int, seed: int, mutant: bool = False) -> list[PropertyResult]:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    n_max = max(1, n_max)
    with keep_collinear_mutant(mutant):
        return [
            _instance_property("strict_vs_brute", prop_strict, trials, n_max, seed),
            _instance_property("closeness_vs_brute", prop_eps, trials, n_max, seed),
            _instance_property("weak_vs_brute", prop_weak, trials, n_max, seed),
            _instance_property("characterization", characterization_mismatch, trials, n_max, seed),
            _instance_property("claims", prop_claims, trials, n_max, seed),
            _instance_property("perturbation", prop_perturb, trials, n_max, seed),
            _instance_property("closeness_shuffle", prop_eps_permutation, trials, n_max, seed, uses_rng=True),
            _points_property("hull_vs_oracles", prop_hull, trials, n_max, seed),
            _sort_property(trials, n_max, seed),
            _tangency_property(trials, seed),
        ]


def format_results(results: list[PropertyResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status}  {r.name:<20} passed={r.passed} failed={r.failed}")
        if r.example:
            lines.append(f"      minimal failing case: {r.example}")
    return "\n".join(lines)

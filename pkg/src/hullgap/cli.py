"""``hullgap`` command line.

Exit codes: 0 for "no" or a passing run, 10 for "yes", 1 for any usage,
parse or I/O error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import reductions
from .geom import PointClass
from .hull import compute_hull
from .io import (
    InputFormatError,
    construction_points,
    is_instance_text,
    parse_instance,
    parse_points,
    read_text,
    render_points,
)

EXIT_NO = 0
EXIT_YES = 10
EXIT_ERROR = 1

INSTANCE_PROBLEMS = {
    "strict": reductions.strict_closeness_witness,
    "closeness": reductions.eps_closeness_witness,
    "weak": reductions.weak_closeness_witness,
}
POINT_PROBLEMS = ("api", "convex-position")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load_points(path):
    text = read_text(path)
    if is_instance_text(text):
        return construction_points(reductions.build_construction(parse_instance(text, path)))
    return parse_points(text, path)


def cmd_decide(args) -> int:
    if args.problem in INSTANCE_PROBLEMS:
        inst = parse_instance(read_text(args.file), args.file)
        pair = INSTANCE_PROBLEMS[args.problem](inst)
        if pair is None:
            print("no")
            return EXIT_NO
        print(f"yes witness=({pair[0] + 1},{pair[1] + 1})")
        return EXIT_YES

    ps = _load_points(args.file)
    report = compute_hull(ps.points)
    if args.problem == "api":
        k = report.first(PointClass.INTERIOR)
        if k is None:
            print("no")
            return EXIT_NO
        print(f"yes witness={ps.names[k]}={ps.points[k]}")
        return EXIT_YES
    bad = next((k for k, c in enumerate(report.classes) if c is not PointClass.EXTREME), None)
    if bad is None:
        print("yes")
        return EXIT_YES
    print(f"no witness={ps.names[bad]}={ps.points[bad]}")
    return EXIT_NO


def cmd_construct(args) -> int:
    inst = parse_instance(read_text(args.file), args.file)
    text = render_points(construction_points(reductions.build_construction(inst)))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_NO


def cmd_verify(args) -> int:
    from .verify import format_results, run_suite

    results = run_suite(args.trials, args.n_max, args.seed, mutant=args.mutant)
    print(format_results(results))
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} properties passed")
    return EXIT_NO if failed == 0 else EXIT_ERROR


def cmd_bench(args) -> int:
    from .bench import run_bench, write_csv

    records = run_bench(args.sizes, args.families, args.problem, args.seed)
    write_csv(records, args.csv)
    for r in records:
        print(f"{r.family:<11} n={r.n:<7} orient_calls={r.orient_calls:<10} "
              f"wall_ms={r.wall_ns / 1e6:.1f} {args.problem}={'yes' if r.answer else 'no'}")
    return EXIT_NO


def cmd_plot(args) -> int:
    from .svgplot import render_svg

    inst = parse_instance(read_text(args.file), args.file)
    Path(args.svg).write_text(render_svg(inst), encoding="utf-8")
    return EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hullgap", description="Exact hull-based deciders for epsilon-closeness.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("decide", help="answer one decision problem for an input file")
    d.add_argument("problem", choices=list(INSTANCE_PROBLEMS) + list(POINT_PROBLEMS))
    d.add_argument("file")
    d.set_defaults(func=cmd_decide)

    c = sub.add_parser("construct", help="write the point file of S(A, eps) for an instance")
    c.add_argument("file")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run the randomized property suite")
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--n-max", type=int, default=16)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--mutant", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="record predicate counts per instance family and size")
    b.add_argument("--sizes", type=_int_list, default=[1024, 4096, 16384])
    b.add_argument("--families", type=lambda s: [t for t in s.split(",") if t],
                   default=["uniform", "eps-spaced", "all-equal"])
    b.add_argument("--problem", choices=["strict", "closeness", "weak"], default="strict")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--csv", required=True)
    b.set_defaults(func=cmd_bench)

    pl = sub.add_parser("plot", help="draw S(A, eps), its hull and the witness triangles as SVG")
    pl.add_argument("file")
    pl.add_argument("--svg", required=True)
    pl.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "trials", 1) < 1:
        print("hullgap: error: --trials must be at least 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except InputFormatError as exc:
        print(f"hullgap: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError) as exc:
        print(f"hullgap: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

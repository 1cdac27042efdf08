"""Command-line interface: solve, bench, export, instances.

Exit codes: 0 on success, 1 when the solver finds no feasible layout (or an
export is asked for one), 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from typing import Optional

from .bench import format_report_json, run_bench, write_runs_csv
from .corpus import CORPUS, UnknownInstanceError
from .instance_io import (
    ParseError,
    TraceCsvWriter,
    format_instance,
    format_result_json,
    load_instance,
    parse_result_dict,
)
from .model import Hyperparameters, InvalidInputError, ProblemInstance
from .solver import solve
from .svg import ExportError, export_svg, render_svg

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2

# Iteration budgets the benchmarks are quoted at.
SUITE_ITERATIONS = {"suite1": 20000, "suite2": 15000}


def _add_hp_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--iters", type=int, default=None, help="iteration budget (n_it)")
    parser.add_argument("--seed", type=int, default=0, help="run seed (default 0)")
    parser.add_argument("--fmax", type=float, default=None, help="resultant force cap")
    parser.add_argument("--vmax", type=float, default=None, help="speed cap / push magnitude")
    parser.add_argument("--alpha", type=float, default=None, help="gravity-center pull weight")
    parser.add_argument("--smax", type=float, default=None, help="largest container shrink step")
    parser.add_argument("--smin", type=float, default=None, help="smallest container shrink step")
    parser.add_argument("--c", type=float, default=None, help="shrink-step decay rate")
    parser.add_argument("--dt", type=float, default=None, help="integration time step")


def _hyperparameters(args, default_iters: int = 20000) -> Hyperparameters:
    hp = Hyperparameters(seed=args.seed, n_it=args.iters if args.iters is not None else default_iters)
    overrides = {
        "f_max": args.fmax,
        "v_max": args.vmax,
        "alpha": args.alpha,
        "s_max": args.smax,
        "s_min": args.smin,
        "c": args.c,
        "dt": args.dt,
    }
    return replace(hp, **{key: value for key, value in overrides.items() if value is not None})


def _resolve_instance(token: str) -> ProblemInstance:
    if os.path.exists(token):
        return load_instance(token)
    try:
        return CORPUS.get(token)
    except UnknownInstanceError:
        raise ParseError(
            f"{token!r} is neither a readable file nor an embedded instance "
            f"(known: {', '.join(CORPUS.names())})"
        ) from None


def _cmd_solve(args) -> int:
    instance = _resolve_instance(args.instance)
    hp = _hyperparameters(args)

    trace_fh = None
    trace = None
    try:
        if args.trace_csv:
            trace_fh = open(args.trace_csv, "w", encoding="utf-8", newline="")
            trace = TraceCsvWriter(trace_fh)
        result = solve(instance, hp, trace=trace)
    finally:
        if trace_fh is not None:
            trace_fh.close()

    if args.out_json:
        with open(args.out_json, "w", encoding="utf-8") as fh:
            fh.write(format_result_json(result))

    if result.feasible:
        reference = CORPUS.reference_radii.get(instance.name)
        against = f"  (published best {reference})" if reference is not None else ""
        print(
            f"{instance.name}: {instance.n} circles packed into radius "
            f"{result.best_radius:.6f} at iteration {result.best_iteration}{against}"
        )
        if args.out_svg:
            with open(args.out_svg, "wb") as fh:
                fh.write(export_svg(result))
        return EXIT_OK

    print(f"{instance.name}: no feasible layout within {hp.n_it} iterations", file=sys.stderr)
    if args.out_svg:
        print(f"skipping {args.out_svg}: nothing to render", file=sys.stderr)
    return EXIT_INFEASIBLE


def _cmd_bench(args) -> int:
    if args.selector in SUITE_ITERATIONS:
        instances = list(CORPUS.suite(args.selector))
        default_iters = SUITE_ITERATIONS[args.selector]
    else:
        instances = [_resolve_instance(args.selector)]
        default_iters = SUITE_ITERATIONS["suite2"] if instances[0].name.startswith("II") else SUITE_ITERATIONS["suite1"]
    if args.reps < 1:
        raise ParseError(f"--reps must be at least 1, got {args.reps}")
    hp = _hyperparameters(args, default_iters=default_iters)

    summaries, report = run_bench(
        instances,
        args.reps,
        hp,
        jobs=args.jobs,
        reference_radii=CORPUS.reference_radii,
    )

    any_feasible = False
    for name, entry in report["instances"].items():
        if entry["best_radius"] is None:
            print(f"{name}: no feasible run in {args.reps} repetitions")
            continue
        any_feasible = True
        reference = entry["reference_radius"]
        gap = "" if reference is None else f"  (+{(entry['best_radius'] / reference - 1) * 100:.2f}% vs {reference})"
        print(
            f"{name}: best {entry['best_radius']:.4f}  median {entry['median_radius']:.4f}  "
            f"feasible {entry['feasible_runs']}/{args.reps}{gap}"
        )

    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        report_path = os.path.join(args.out_dir, "report.json")
        csv_path = os.path.join(args.out_dir, "runs.csv")
        with open(report_path, "w", encoding="utf-8") as fh:
            fh.write(format_report_json(report))
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            write_runs_csv(fh, summaries)
        print(f"wrote {report_path} and {csv_path}")

    return EXIT_OK if any_feasible else EXIT_INFEASIBLE


def _cmd_export(args) -> int:
    with open(args.result, "r", encoding="utf-8") as fh:
        data = parse_result_dict(fh.read())
    if not data["feasible"]:
        print(f"{args.result}: result is infeasible, nothing to render", file=sys.stderr)
        return EXIT_INFEASIBLE
    payload = render_svg(
        data["instance"],
        data["positions"],
        data["radii"],
        data["masses"],
        data["best_radius"],
    )
    with open(args.svg, "wb") as fh:
        fh.write(payload)
    print(f"wrote {args.svg}")
    return EXIT_OK


def _cmd_instances(args) -> int:
    if args.action == "list":
        for inst in CORPUS.all_instances:
            reference = CORPUS.reference_radii.get(inst.name)
            print(f"{inst.name:<5} {inst.n:>3} circles   published best {reference}")
        return EXIT_OK
    # show
    instance = CORPUS.get(args.name)
    sys.stdout.write(format_instance(instance))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swarmpack",
        description="Pack weighted circles into the smallest balanced container.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="run the solver on one instance")
    p_solve.add_argument("instance", help="instance file path or embedded name (e.g. I1)")
    _add_hp_flags(p_solve)
    p_solve.add_argument("--out-json", default=None, help="write the result as JSON")
    p_solve.add_argument("--out-svg", default=None, help="render the packed layout as SVG")
    p_solve.add_argument("--trace-csv", default=None, help="stream per-iteration records to CSV")
    p_solve.set_defaults(func=_cmd_solve)

    p_bench = sub.add_parser("bench", help="repeated-seed benchmark over a suite or instance")
    p_bench.add_argument("selector", help="suite1, suite2, an embedded name, or a file path")
    p_bench.add_argument("--reps", type=int, required=True, help="repetitions (seeds 0..K-1)")
    p_bench.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    _add_hp_flags(p_bench)
    p_bench.add_argument("--out-dir", default=None, help="directory for report.json and runs.csv")
    p_bench.set_defaults(func=_cmd_bench)

    p_export = sub.add_parser("export", help="render a stored result JSON as SVG")
    p_export.add_argument("--result", required=True, help="result JSON path")
    p_export.add_argument("--svg", required=True, help="output SVG path")
    p_export.set_defaults(func=_cmd_export)

    p_inst = sub.add_parser("instances", help="inspect the embedded benchmark instances")
    inst_sub = p_inst.add_subparsers(dest="action", required=True)
    inst_list = inst_sub.add_parser("list", help="list embedded instances")
    inst_list.set_defaults(func=_cmd_instances, action="list")
    inst_show = inst_sub.add_parser("show", help="print one instance in the text format")
    inst_show.add_argument("name")
    inst_show.set_defaults(func=_cmd_instances, action="show")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, InvalidInputError, UnknownInstanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExportError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

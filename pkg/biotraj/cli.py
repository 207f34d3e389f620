"""Command line entry point.

Exit codes: 0 success, 1 usage error, 2 input data, model or output error,
3 infeasible plan. Errors are reported on stderr as a JSON object
``{"error": code, "message": ..., "details": ...}``.
"""
import argparse
import json
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

import attr

from . import csvio, defaults, phases, profiles, pso, signals
from .error import BiotrajError, InfeasiblePlanError, InputDataError, NoPeakFoundError
from .model import Bounds, FilterSpec, PhaseSpec, PlanResult, mapper
from .planner import BioPlanner
from .utils import data_path

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3

BENCHMARK_CONFIG = data_path("benchmark.json")
"""Problem configuration of the bundled benchmark."""

SEGMENT_FILE = "segment.json"


class UsageError(Exception):
    """Command line cannot be parsed."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _report_error(code: str, message: str, details: Any = None) -> None:
    payload = {"error": code, "message": message, "details": details}
    sys.stderr.write(json.dumps(payload, default=str) + "\n")


def _planner(args: argparse.Namespace) -> BioPlanner:
    planner = BioPlanner.from_config(csvio.load_config(args.config), args.seed)
    planner.workers = args.workers
    return planner


def _check_feasible(result: PlanResult) -> int:
    if result.infeasible:
        raise InfeasiblePlanError(
            "Best plan violates the joint limits", details={"violation": result.violation}
        )
    return EXIT_OK


def _plan(args: argparse.Namespace) -> int:
    planner = _planner(args)
    result = planner.optimize()
    planner.compare_report(result, args.out)
    _LOGGER.info("Plan written to %s", args.out)
    return _check_feasible(result)


def _compare(args: argparse.Namespace) -> int:
    planner = _planner(args)
    result = planner.optimize()
    report = planner.compare_report(result, args.out)
    sys.stdout.write(report.text)
    return _check_feasible(result)


def _phase_spec(path: Optional[str]) -> PhaseSpec:
    if path is None:
        return PhaseSpec()
    try:
        return mapper.map_phase_spec(mapper.validate_config(csvio.load_config(path)).get("phase"))
    except ValueError as exc:
        raise InputDataError(
            "Phase configuration is not valid", code="invalid_config", details=str(exc)
        ) from exc


def _filter_spec(cutoff: float, order: int = defaults.FILTER_ORDER) -> FilterSpec:
    try:
        return FilterSpec(cutoff, order)
    except ValueError as exc:
        raise InputDataError(
            "Filter settings are not valid", code="invalid_input", details=str(exc)
        ) from exc


def _segment(args: argparse.Namespace) -> int:
    spec = _phase_spec(args.config)
    motion = csvio.load_motion_csv(args.motion)
    emg = csvio.load_emg_csv(args.emg) if args.emg else None
    if args.cutoff > 0:
        motion = signals.condition_motion(motion, _filter_spec(args.cutoff))
    intervals = phases.segment_by_elbow_angle(motion.elbow_angle, spec, args.hysteresis)

    features: Optional[Dict[str, Any]]
    try:
        features = attr.asdict(phases.extract_feature_points(motion, emg, spec))
    except NoPeakFoundError as exc:
        _LOGGER.warning("No feature points: %s", exc.message)
        features = None

    csvio.make_output_dir(args.out)
    csvio.write_json(
        {"intervals": intervals.as_dict(), "features": features},
        os.path.join(args.out, SEGMENT_FILE),
    )
    _LOGGER.info("Segmentation written to %s", args.out)
    return EXIT_OK


def _filter(args: argparse.Namespace) -> int:
    series = csvio.load_series_csv(getattr(args, "in"))
    filtered = signals.lowpass_zero_phase(series, _filter_spec(args.cutoff, args.order))
    csvio.write_series_csv(filtered, args.out)
    _LOGGER.info("Filtered series written to %s", args.out)
    return EXIT_OK


def _profiles(args: argparse.Namespace) -> int:
    kinds = profiles.PROFILE_KINDS if args.kind == "all" else (args.kind,)
    csvio.make_output_dir(args.out)
    for kind in kinds:
        traj = profiles.classic_profile(kind, args.theta0, args.thetaf, args.duration, args.dt)
        csvio.write_trajectory_csv(traj, os.path.join(args.out, "profile_{}.csv".format(kind)))
    _LOGGER.info("%s profiles written to %s", len(kinds), args.out)
    return EXIT_OK


def _pso_bench(args: argparse.Namespace) -> int:
    low, high = pso.BENCHMARK_BOUNDS[args.fn]
    config = mapper.map_pso_config(
        {"swarm_size": args.swarm_size, "iterations": args.iterations, "seed": args.seed}
    )
    result = pso.optimize(
        pso.BENCHMARKS[args.fn], Bounds.cube(low, high, args.dim), config, workers=args.workers
    )
    summary = {
        "function": args.fn,
        "dimension": args.dim,
        "best_position": [float(v) for v in result.best_position],
        "best_fitness": result.best_fitness,
        "evaluations": result.evaluations,
        "iterations": result.iterations,
        "terminated_by": result.terminated_by,
        "generator": result.generator,
        "seed": result.seed,
    }
    sys.stdout.write(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError("{} is not a positive integer".format(value))
    return number


def _add_planning_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--config", default=BENCHMARK_CONFIG, help="problem JSON, the benchmark by default"
    )
    parser.add_argument("--seed", type=int, help="swarm seed, overrides the configuration")
    parser.add_argument(
        "--workers", type=int, help="fitness threads, ${} by default".format(defaults.THREADS_ENV)
    )


def build_parser() -> argparse.ArgumentParser:
    """Parser of every subcommand."""
    parser = _Parser(prog="biotraj", description="Bio-inspired lift trajectory planning")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    plan = commands.add_parser("plan", help="optimize a plan and write its files")
    _add_planning_arguments(plan)
    plan.add_argument("--out", required=True, help="output directory")
    plan.set_defaults(handler=_plan)

    compare = commands.add_parser("compare", help="print the standard against optimized table")
    _add_planning_arguments(compare)
    compare.add_argument("--out", help="also write the plan files there")
    compare.set_defaults(handler=_compare)

    segment = commands.add_parser("segment", help="split a recording in phases")
    segment.add_argument("--motion", required=True, help="motion CSV")
    segment.add_argument("--emg", help="EMG CSV")
    segment.add_argument("--config", help="problem JSON providing the phase regions")
    segment.add_argument(
        "--cutoff",
        type=float,
        default=defaults.MOTION_CUTOFF_HZ,
        help="motion low-pass cutoff in Hz, 0 disables filtering",
    )
    segment.add_argument(
        "--hysteresis", type=float, default=defaults.HYSTERESIS_DEG, help="degrees"
    )
    segment.add_argument("--out", required=True, help="output directory")
    segment.set_defaults(handler=_segment)

    filter_ = commands.add_parser("filter", help="zero-phase low-pass a t,value series")
    filter_.add_argument("--in", required=True, help="input CSV")
    filter_.add_argument("--cutoff", type=float, required=True, help="Hz")
    filter_.add_argument("--order", type=_positive_int, default=defaults.FILTER_ORDER)
    filter_.add_argument("--out", required=True, help="output CSV")
    filter_.set_defaults(handler=_filter)

    profile = commands.add_parser("profiles", help="sample the classic velocity profiles")
    profile.add_argument("--kind", default="all", choices=("all",) + profiles.PROFILE_KINDS)
    profile.add_argument("--theta0", type=float, default=0.0)
    profile.add_argument("--thetaf", type=float, default=150.0)
    profile.add_argument("--duration", type=float, default=defaults.PLAN_DURATION)
    profile.add_argument("--dt", type=float, default=defaults.PLAN_DT)
    profile.add_argument("--out", required=True, help="output directory")
    profile.set_defaults(handler=_profiles)

    bench = commands.add_parser("pso-bench", help="run the swarm on a test function")
    bench.add_argument("--fn", default="sphere", choices=tuple(pso.BENCHMARKS))
    bench.add_argument("--dim", type=_positive_int, default=3)
    bench.add_argument("--seed", type=int, default=42)
    bench.add_argument("--swarm-size", type=int, default=defaults.PSO_SWARM_SIZE)
    bench.add_argument("--iterations", type=int, default=defaults.PSO_ITERATIONS)
    bench.add_argument("--workers", type=int, default=0)
    bench.set_defaults(handler=_pso_bench)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run a command line, returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _report_error("usage", str(exc))
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.verbose:
        logging.getLogger("biotraj").setLevel(logging.DEBUG)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except InfeasiblePlanError as exc:
        _report_error(exc.code, exc.message, exc.details)
        return EXIT_INFEASIBLE
    except BiotrajError as exc:
        _LOGGER.debug("Command failed", exc_info=True)
        _report_error(exc.code, exc.message, exc.details)
        return EXIT_INPUT


def main(argv: Optional[List[str]] = None) -> None:
    """Console script entry point."""
    sys.exit(run(argv))

"""Reports comparing the standard and the optimized plans."""
import logging
import math
import os
from typing import Any, Dict, Optional

import attr

from . import dynamics
from .csvio import (
    PathLike,
    make_output_dir,
    write_json,
    write_series_csv,
    write_trajectory_csv,
)
from .model import ArmModel, PlanResult, SampledTrajectory, TimeSeries
from .model.constants import DECISION_NAMES

_LOGGER = logging.getLogger(__name__)

STANDARD_TRAJECTORY_FILE = "standard_trajectory.csv"
OPTIMIZED_TRAJECTORY_FILE = "optimized_trajectory.csv"
STANDARD_POWER_FILE = "standard_power.csv"
OPTIMIZED_POWER_FILE = "optimized_power.csv"
SUMMARY_FILE = "summary.json"


@attr.s(frozen=True)
class Report:
    """Rendered comparison.

    Args:
        text (str): Human readable table.
        summary (dict): Scalar results, as written in the summary JSON.
        files (Dict[str, str]): Written files by kind, empty when nothing
            was written.
    """

    text = attr.ib(type=str)
    summary = attr.ib(type=Dict[str, Any])
    files = attr.ib(type=Dict[str, str], factory=dict)


def _lift(arm: ArmModel, traj: SampledTrajectory) -> Dict[str, float]:
    start, end = traj.theta[:, 0], traj.theta[:, -1]
    potential = dynamics.potential_energy(arm, *end) - dynamics.potential_energy(arm, *start)
    height = dynamics.tip_position(arm, *end)[1] - dynamics.tip_position(arm, *start)[1]
    return {"potential_energy_gain": float(potential), "payload_height_gain": float(height)}


def summary(result: PlanResult, arm: Optional[ArmModel] = None) -> Dict[str, Any]:
    """Scalar fields of a result, JSON ready.

    With the *arm*, the potential energy gained by the lift is added: no rest
    to rest plan needs less absolute work.
    """
    standard, optimized = result.standard_energy, result.optimized_energy
    data: Dict[str, Any] = {
        "standard_work": standard.total_work,
        "optimized_work": optimized.total_work,
        "standard_work_per_joint": list(standard.work_per_joint),
        "optimized_work_per_joint": list(optimized.work_per_joint),
        "standard_peak_power": standard.peak_power,
        "optimized_peak_power": optimized.peak_power,
        "standard_effort": standard.total_effort,
        "optimized_effort": optimized.total_effort,
        "work_reduction_pct": result.work_reduction_pct,
        "peak_power_reduction_pct": result.peak_power_reduction_pct,
        "effort_reduction_pct": result.effort_reduction_pct,
        "standard_peak_angle": result.standard_peak_angle,
        "peak_angle_achieved": result.peak_angle_achieved,
        "peak_angle_deviation": result.peak_angle_deviation,
        "violation": result.violation,
        "infeasible": result.infeasible,
        "decision": dict(zip(DECISION_NAMES, result.decision)),
        "pso": {
            "best_fitness": result.pso.best_fitness,
            "evaluations": result.pso.evaluations,
            "iterations": result.pso.iterations,
            "terminated_by": result.pso.terminated_by,
            "generator": result.pso.generator,
            "seed": result.pso.seed,
        },
    }
    if arm is not None:
        data.update(_lift(arm, result.standard))
    return {key: _json_safe(value) for key, value in data.items()}


def _json_safe(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: _json_safe(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_json_safe(item) for item in value]
    return value


def format_table(result: PlanResult) -> str:
    """Side by side table of both plans."""
    standard, optimized = result.standard_energy, result.optimized_energy
    rows = [
        ("", "standard", "optimized", "reduction %"),
        (
            "work [J]",
            "{:.4f}".format(standard.total_work),
            "{:.4f}".format(optimized.total_work),
            "{:.2f}".format(result.work_reduction_pct),
        ),
        (
            "peak power [W]",
            "{:.4f}".format(standard.peak_power),
            "{:.4f}".format(optimized.peak_power),
            "{:.2f}".format(result.peak_power_reduction_pct),
        ),
        (
            "effort [N2m2s]",
            "{:.4f}".format(standard.total_effort),
            "{:.4f}".format(optimized.total_effort),
            "{:.2f}".format(result.effort_reduction_pct),
        ),
        (
            "peak angle [deg]",
            "{:.2f}".format(result.standard_peak_angle),
            "{:.2f}".format(result.peak_angle_achieved),
            "",
        ),
    ]
    widths = [max(len(row[column]) for row in rows) for column in range(4)]
    lines = []
    for row in rows:
        cells = [row[0].ljust(widths[0])]
        cells += [cell.rjust(width) for cell, width in zip(row[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    lines.append("peak deviation {:.2f} deg".format(result.peak_angle_deviation))
    if result.infeasible:
        lines.append("INFEASIBLE: limit violation {:.6g}".format(result.violation))
    return "\n".join(lines) + "\n"


def _power(traj: SampledTrajectory) -> TimeSeries:
    return TimeSeries(traj.t, traj.power, "power")


def compare_report(
    result: PlanResult, out_dir: Optional[PathLike] = None, arm: Optional[ArmModel] = None
) -> Report:
    """Render a result and, given a directory, write its files.

    The directory receives both sampled trajectories with torques, both
    power curves as ``t,power`` and ``summary.json``.

    Args:
        result (PlanResult): Planning outcome.
        out_dir (str): Output directory, created when missing.
        arm (ArmModel): Arm of the problem, adds the lift energy to the
            summary.
    """
    report = Report(text=format_table(result), summary=summary(result, arm))
    if out_dir is None:
        return report

    make_output_dir(out_dir)
    files = {
        "standard_trajectory": os.path.join(out_dir, STANDARD_TRAJECTORY_FILE),
        "optimized_trajectory": os.path.join(out_dir, OPTIMIZED_TRAJECTORY_FILE),
        "standard_power": os.path.join(out_dir, STANDARD_POWER_FILE),
        "optimized_power": os.path.join(out_dir, OPTIMIZED_POWER_FILE),
        "summary": os.path.join(out_dir, SUMMARY_FILE),
    }
    write_trajectory_csv(result.standard, files["standard_trajectory"])
    write_trajectory_csv(result.optimized, files["optimized_trajectory"])
    write_series_csv(_power(result.standard), files["standard_power"])
    write_series_csv(_power(result.optimized), files["optimized_power"])
    write_json(report.summary, files["summary"])
    _LOGGER.info("Wrote report to %s", out_dir)
    return attr.evolve(report, files=files)

"""Mappers from json to model classes."""
import logging
from typing import Any, Dict, Optional

from schema import SchemaError

from . import (
    ArmModel,
    Limits,
    ObjectiveWeights,
    PhaseSpec,
    PlanningProblem,
    PsoConfig,
)
from .. import defaults, schemas
from ..error import InputDataError

_LOGGER = logging.getLogger(__name__)


def validate_config(json: Any) -> Dict[str, Any]:
    """Check a problem configuration against :data:`biotraj.schemas.PROBLEM`.

    Raises:
        InputDataError: with code ``invalid_config``.
    """
    if not isinstance(json, dict):
        raise InputDataError("Configuration must be a JSON object", code="invalid_config")
    try:
        return dict(schemas.PROBLEM.validate(json))
    except SchemaError as exc:
        raise InputDataError(
            "Configuration does not match its schema", code="invalid_config", details=str(exc)
        ) from exc


def map_arm(json: Optional[Dict[str, Any]]) -> ArmModel:
    """Map *arm*, missing keys take the benchmark values."""
    values = {key: float(value) for key, value in (json or {}).items() if key in _ARM_KEYS}
    return ArmModel(**values)


def map_phase_spec(json: Optional[Dict[str, Any]]) -> PhaseSpec:
    """Map *phase*."""
    json = json or {}
    default = PhaseSpec()
    return PhaseSpec(
        high_load=json.get("high_load", default.high_load),
        weakest=json.get("weakest", default.weakest),
        decel=json.get("decel", default.decel),
        target_peak_angle=json.get("target_peak_angle_deg", default.target_peak_angle),
    )


def map_limits(json: Optional[Dict[str, Any]]) -> Limits:
    json = json or {}
    return Limits(
        omega_max=json.get("omega_max", defaults.OMEGA_MAX),
        alpha_max=json.get("alpha_max", defaults.ALPHA_MAX),
    )


def map_weights(json: Optional[Dict[str, Any]]) -> ObjectiveWeights:
    return ObjectiveWeights(
        **{key: float(value) for key, value in (json or {}).items() if key in _WEIGHT_KEYS}
    )


def map_pso_config(json: Optional[Dict[str, Any]], seed: Optional[int] = None) -> PsoConfig:
    """Map *pso*, an explicit seed wins over the configured one."""
    values = {key: value for key, value in (json or {}).items() if key in _PSO_KEYS}
    if seed is not None:
        values["seed"] = seed
    try:
        return PsoConfig(**values)
    except ValueError as exc:
        raise InputDataError(
            "Swarm configuration is not valid", code="invalid_config", details=str(exc)
        ) from exc


def map_problem(json: Any) -> PlanningProblem:
    """Map a full problem configuration.

    Raises:
        InputDataError: with code ``invalid_config`` when the configuration
            does not validate, or when values are out of range.
    """
    config = validate_config(json)
    try:
        problem = PlanningProblem(
            arm=map_arm(config.get("arm")),
            start_deg=config.get("start_deg", defaults.START_DEG),
            end_deg=config.get("end_deg", defaults.END_DEG),
            duration=float(config.get("duration_s", defaults.PLAN_DURATION)),
            phase=map_phase_spec(config.get("phase")),
            limits=map_limits(config.get("limits")),
            weights=map_weights(config.get("weights")),
            dt=float(config.get("dt_s", defaults.PLAN_DT)),
        )
    except ValueError as exc:
        raise InputDataError(
            "Configuration values are not valid", code="invalid_config", details=str(exc)
        ) from exc
    _LOGGER.debug("Mapped problem %s", problem)
    return problem


_ARM_KEYS = ("l1", "l2", "m1", "m2", "m_payload", "g")
_WEIGHT_KEYS = ("w_energy", "w_peak", "w_limit", "w_effort", "w_peak_power")
_PSO_KEYS = (
    "swarm_size",
    "iterations",
    "inertia",
    "cognitive",
    "social",
    "seed",
    "tolerance",
    "stagnation_window",
)

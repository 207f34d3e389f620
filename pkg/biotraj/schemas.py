"""Expected configuration schemas"""
from schema import And, Optional, Or, Schema

numeric = Or(int, float)  # pylint: disable=invalid-name
positive = And(numeric, lambda v: v > 0)  # pylint: disable=invalid-name
non_negative = And(numeric, lambda v: v >= 0)  # pylint: disable=invalid-name
count = And(int, lambda v: v >= 0)  # pylint: disable=invalid-name
pair = And([numeric], lambda v: len(v) == 2)  # pylint: disable=invalid-name

ARM = Schema(
    {
        Optional("l1"): positive,
        Optional("l2"): positive,
        Optional("m1"): non_negative,
        Optional("m2"): non_negative,
        Optional("m_payload"): non_negative,
        Optional("g"): non_negative,
    },
    ignore_extra_keys=True,
)

PHASE = Schema(
    {
        Optional("high_load"): pair,
        Optional("weakest"): pair,
        Optional("decel"): pair,
        Optional("target_peak_angle_deg"): numeric,
    },
    ignore_extra_keys=True,
)

LIMITS = Schema(
    {Optional("omega_max"): pair, Optional("alpha_max"): pair},
    ignore_extra_keys=True,
)

WEIGHTS = Schema(
    {
        Optional("w_energy"): non_negative,
        Optional("w_peak"): non_negative,
        Optional("w_limit"): non_negative,
        Optional("w_effort"): non_negative,
        Optional("w_peak_power"): non_negative,
    },
    ignore_extra_keys=True,
)

PSO = Schema(
    {
        Optional("swarm_size"): And(int, lambda v: v >= 2),
        Optional("iterations"): count,
        Optional("inertia"): And(numeric, lambda v: 0 <= v < 1),
        Optional("cognitive"): positive,
        Optional("social"): positive,
        Optional("seed"): count,
        Optional("tolerance"): non_negative,
        Optional("stagnation_window"): And(int, lambda v: v >= 1),
    },
    ignore_extra_keys=True,
)

PROBLEM = Schema(
    {
        Optional("arm"): ARM,
        Optional("start_deg"): pair,
        Optional("end_deg"): pair,
        Optional("duration_s"): positive,
        Optional("dt_s"): positive,
        Optional("limits"): LIMITS,
        Optional("phase"): PHASE,
        Optional("weights"): WEIGHTS,
        Optional("pso"): PSO,
    },
    ignore_extra_keys=True,
)

CSV_HEADER = Schema(
    And(
        [And(str, lambda v: len(v.strip()) > 0)],
        lambda v: len(v) >= 2,
        lambda v: len(set(v)) == len(v),
    )
)
"""Header of every CSV file: at least two distinct, non blank names."""

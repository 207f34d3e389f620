"""contains some default parameters of the application."""

GRAVITY = 9.81
"""Gravitational acceleration, m/s²."""

BENCHMARK_L1 = 0.495
"""Upper arm length of the benchmark robot, m."""

BENCHMARK_L2 = 0.45
"""Forearm length of the benchmark robot, m."""

BENCHMARK_PAYLOAD = 4.0
"""Payload hanging at the tip of the benchmark robot, kg."""

DEFAULT_M1 = 3.0
"""Upper arm mass, kg. Not published for the benchmark robot."""

DEFAULT_M2 = 2.5
"""Forearm mass, kg. Not published for the benchmark robot."""

MAX_CONDITION_NUMBER = 1e8
"""Mass matrix condition number above which forward dynamics gives up."""

PLAN_DT = 1e-3
"""Sampling step of planned trajectories, s."""

PLAN_DURATION = 3.0
"""Duration of the lift, s."""

START_DEG = (0.0, 0.0)
"""Default start angles (shoulder, elbow), degrees."""

END_DEG = (30.0, 150.0)
"""Default end angles (shoulder, elbow), degrees."""

OMEGA_MAX = (3.0, 3.0)
"""Joint speed limits (shoulder, elbow), rad/s."""

ALPHA_MAX = (10.0, 10.0)
"""Joint acceleration limits (shoulder, elbow), rad/s²."""

LIMIT_TOLERANCE = 1e-3
"""Violation magnitude below which a plan is still feasible."""

VIA_FRACTION_BOUNDS = (0.15, 0.85)
"""Allowed via point time, as a fraction of the duration."""

PEAK_DEADBAND_DEG = 2.0
"""Peak placement deviation tolerated without penalty, degrees."""

MOTION_CUTOFF_HZ = 6.0
"""Low-pass cutoff for joint angle recordings."""

EMG_CUTOFF_HZ = 4.0
"""Low-pass cutoff for EMG envelopes."""

FILTER_ORDER = 2
"""Butterworth order of the zero-phase filters."""

HYSTERESIS_DEG = 1.0
"""Hysteresis applied on phase boundary crossings."""

PSO_SWARM_SIZE = 40
"""Particles in the swarm."""

PSO_ITERATIONS = 300
"""Maximum swarm updates after the initial evaluation."""

PSO_INERTIA = 0.72
"""Share of the previous velocity kept by a particle."""

PSO_COGNITIVE = 1.49
"""Pull towards the particle's own best position."""

PSO_SOCIAL = 1.49
"""Pull towards the swarm's best position."""

PSO_TOLERANCE = 1e-8
"""Best fitness improvement below which the swarm is stagnating."""

PSO_STAGNATION_WINDOW = 50
"""Iterations of stagnation that stop a run."""

PSO_VELOCITY_FRACTION = 0.2
"""Per-dimension velocity clamp, as a fraction of the box width."""

PSO_GENERATOR = "PCG64"
"""Name of the numpy bit generator seeding the swarm."""

THREADS_ENV = "BIOTRAJ_THREADS"
"""Environment variable capping parallel fitness evaluations."""

DT_TOLERANCE = 1e-6
"""Relative deviation from dt tolerated between two samples of a uniform grid."""

MIN_PROMINENCE_FRACTION = 0.1
"""Default peak prominence, as a fraction of the series range."""

CSV_FLOAT_FORMAT = "%.17g"
"""Written floats carry full double precision."""

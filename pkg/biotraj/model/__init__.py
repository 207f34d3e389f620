"""Value types of the planning toolkit."""
from .arm import ArmModel, JointState, DynamicsTerms, EnergyReport  # noqa: F401
from .trajectory import (  # noqa: F401
    BoundaryCondition,
    QuinticSegment,
    PiecewiseTrajectory,
    SampledTrajectory,
)
from .recording import TimeSeries, MotionRecording, EmgRecording, FilterSpec  # noqa: F401
from .phase import PhaseSpec, PhaseIntervals, FeaturePoints  # noqa: F401
from .swarm import PsoConfig, Bounds, OptResult  # noqa: F401
from .plan import (  # noqa: F401
    Limits,
    ObjectiveWeights,
    PlanningProblem,
    PlanEvaluation,
    PlanResult,
)

"""Stores all the constants."""

SHOULDER = 0
ELBOW = 1

EMG_CHANNELS = ("deltoid", "triceps", "biceps", "brachioradialis")
"""Recorded muscles, in file column order."""

PHASES = ("high_load", "weakest", "decel")
"""Phase names, in elbow flexion order."""

TORQUE_COLUMNS = ("tau1", "tau2", "power")
MOTION_COLUMNS = ("t", "shoulder_angle", "elbow_angle")
WRIST_COLUMN = "wrist_accel"
EMG_COLUMNS = ("t",) + EMG_CHANNELS

DECISION_NAMES = ("via_fraction", "omega1_via", "omega2_via", "alpha1_via", "alpha2_via")
"""Meaning of each planner decision vector component."""

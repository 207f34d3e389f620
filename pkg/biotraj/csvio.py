"""CSV and JSON files read and written by the toolkit.

Every CSV file is UTF-8, comma separated, with a header line and a ``t``
column of strictly increasing seconds first.
"""
import contextlib
import json
import logging
import math
import os
import re
from typing import Any, Dict, Iterator, List, Optional, Sequence, Union

import numpy as np
import pandas as pd
from schema import SchemaError

from . import defaults, schemas
from .error import InputDataError
from .model import EmgRecording, MotionRecording, SampledTrajectory, TimeSeries
from .model.constants import EMG_COLUMNS, MOTION_COLUMNS, TORQUE_COLUMNS, WRIST_COLUMN

_LOGGER = logging.getLogger(__name__)

PathLike = Union[str, "os.PathLike[str]"]

_JOINT_COLUMN = re.compile(r"^theta(\d+)$")


def _check_exists(path: PathLike) -> None:
    if not os.path.isfile(path):
        raise InputDataError("File not found", code="file_not_found", details=str(path))


def load_config(path: PathLike) -> Dict[str, Any]:
    """Read a JSON problem configuration.

    Raises:
        InputDataError: with code ``file_not_found``, or ``invalid_config``
            when the file is not valid JSON.
    """
    _check_exists(path)
    with open(path, encoding="utf-8") as file:
        try:
            config = json.load(file)
        except json.JSONDecodeError as exc:
            raise InputDataError(
                "Configuration is not valid JSON", code="invalid_config", details=str(exc)
            ) from exc
    _LOGGER.debug("Loaded configuration %s", path)
    return config  # type: ignore


def _to_float(cell: str) -> float:
    # correctly rounded, so %.17g cells read back bit for bit
    try:
        return float(cell)
    except ValueError:
        return math.nan


def _read_frame(path: PathLike, required: Sequence[str]) -> pd.DataFrame:
    """Read a CSV file as a frame of floats with a validated header."""
    _check_exists(path)
    try:
        raw = pd.read_csv(
            path,
            header=None,
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
            encoding="utf-8",
        )
    except pd.errors.EmptyDataError as exc:
        raise InputDataError("File is empty", code="empty_file", details=str(path)) from exc
    except pd.errors.ParserError as exc:
        raise InputDataError(
            "Rows do not match the header", code="non_numeric", details=str(exc)
        ) from exc

    header = [str(name).strip() for name in raw.iloc[0]]
    try:
        schemas.CSV_HEADER.validate(header)
    except SchemaError as exc:
        raise InputDataError(
            "Header is not valid", code="malformed_header", details=header
        ) from exc
    if header[0] != "t":
        raise InputDataError(
            "First column must be t", code="malformed_header", details=header
        )
    missing = [name for name in required if name not in header]
    if missing:
        raise InputDataError("Missing column", code="missing_column", details=missing)

    cells = raw.iloc[1:].reset_index(drop=True)
    cells.columns = header
    if cells.empty:
        raise InputDataError("File has no data row", code="empty_file", details=str(path))

    frame = cells.apply(lambda column: column.map(_to_float))
    invalid = ~np.isfinite(frame.to_numpy(dtype=float))
    if invalid.any():
        row, column = (int(i) for i in np.argwhere(invalid)[0])
        raise InputDataError(
            "Cell is not a finite number",
            code="non_numeric",
            details={"row": row + 2, "column": header[column], "value": cells.iat[row, column]},
        )

    steps = np.diff(frame["t"].to_numpy())
    if np.any(steps <= 0):
        row = int(np.nonzero(steps <= 0)[0][0]) + 1
        raise InputDataError(
            "Time is not strictly increasing",
            code="non_monotonic_time",
            details={"row": row + 2, "t": float(frame["t"].iat[row])},
        )
    _LOGGER.debug("Read %s rows of %s from %s", len(frame), list(frame.columns), path)
    return frame


def _series(frame: pd.DataFrame, column: str) -> TimeSeries:
    return TimeSeries(frame["t"].to_numpy(), frame[column].to_numpy(), column)


def load_motion_csv(path: PathLike) -> MotionRecording:
    """Read a motion recording.

    Header ``t,shoulder_angle,elbow_angle[,wrist_accel]``, angles in degrees.

    Raises:
        InputDataError: with code ``file_not_found``, ``empty_file``,
            ``malformed_header``, ``missing_column``, ``non_numeric`` or
            ``non_monotonic_time``.
    """
    frame = _read_frame(path, MOTION_COLUMNS)
    recording = MotionRecording(
        shoulder_angle=_series(frame, "shoulder_angle"),
        elbow_angle=_series(frame, "elbow_angle"),
        wrist_accel=_series(frame, WRIST_COLUMN) if WRIST_COLUMN in frame else None,
    )
    _LOGGER.info("Loaded motion recording %s, %s rows", path, len(frame))
    return recording


def load_emg_csv(path: PathLike) -> EmgRecording:
    """Read a four channel EMG recording.

    Header ``t,deltoid,triceps,biceps,brachioradialis``, millivolts. Errors
    are those of :func:`load_motion_csv`.
    """
    frame = _read_frame(path, EMG_COLUMNS)
    recording = EmgRecording(*(_series(frame, name) for name in EMG_COLUMNS[1:]))
    _LOGGER.info("Loaded EMG recording %s, %s rows, %s channels", path, len(frame), 4)
    return recording


def load_series_csv(path: PathLike) -> TimeSeries:
    """Read a ``t,<name>`` file, the series takes the name of the value
    column."""
    frame = _read_frame(path, ("t",))
    if len(frame.columns) != 2:
        raise InputDataError(
            "A series file has exactly two columns",
            code="malformed_header",
            details=list(frame.columns),
        )
    return _series(frame, frame.columns[1])


@contextlib.contextmanager
def _writing(path: PathLike) -> Iterator[None]:
    """Report an ``OSError`` raised while writing *path* as ``output_not_writable``."""
    try:
        yield
    except OSError as exc:
        raise InputDataError(
            "Cannot write output",
            code="output_not_writable",
            details={"path": str(path), "reason": exc.strerror or str(exc)},
        ) from exc


def make_output_dir(path: PathLike) -> None:
    """Create an output directory and its parents when missing.

    Raises:
        InputDataError: with code ``output_not_writable``.
    """
    with _writing(path):
        os.makedirs(path, exist_ok=True)


def _write_frame(columns: Dict[str, np.ndarray], path: PathLike) -> None:
    with _writing(path):
        pd.DataFrame(columns).to_csv(
            path, index=False, float_format=defaults.CSV_FLOAT_FORMAT, lineterminator="\n"
        )
    _LOGGER.debug("Wrote %s", path)


def write_series_csv(series: TimeSeries, path: PathLike) -> None:
    """Write a ``t,<name>`` file."""
    if series.name == "t":
        raise InputDataError("Series cannot be named t", code="malformed_header")
    _write_frame({"t": series.t, series.name: series.v}, path)


def trajectory_columns(joints: int, torques: bool) -> List[str]:
    """Column names of a trajectory of *joints* joints."""
    columns = ["t"]
    for joint in range(1, joints + 1):
        columns += ["theta{}".format(joint), "omega{}".format(joint), "alpha{}".format(joint)]
    if torques:
        columns += ["tau{}".format(joint) for joint in range(1, joints + 1)] + ["power"]
    return columns


def write_trajectory_csv(traj: SampledTrajectory, path: PathLike) -> None:
    """Write a sampled trajectory.

    Two joint plans use ``t,theta1,omega1,alpha1,theta2,omega2,alpha2``
    followed by ``tau1,tau2,power`` when torques are known.
    """
    columns: Dict[str, np.ndarray] = {"t": traj.t}
    for joint in range(traj.joints):
        columns["theta{}".format(joint + 1)] = traj.theta[joint]
        columns["omega{}".format(joint + 1)] = traj.omega[joint]
        columns["alpha{}".format(joint + 1)] = traj.alpha[joint]
    if traj.has_torques:
        for joint in range(traj.joints):
            columns["tau{}".format(joint + 1)] = traj.tau[joint]  # type: ignore
        columns[TORQUE_COLUMNS[-1]] = traj.power  # type: ignore
    _write_frame(columns, path)


def load_trajectory_csv(path: PathLike, dt: Optional[float] = None) -> SampledTrajectory:
    """Read a trajectory written by :func:`write_trajectory_csv`.

    Args:
        path (str): File to read.
        dt (float): Nominal step, the first step of the file when omitted.

    Raises:
        InputDataError: as :func:`load_motion_csv`.
    """
    header = list(_read_frame(path, ("t",)).columns)
    joints = sum(1 for name in header if _JOINT_COLUMN.match(name))
    if joints == 0:
        raise InputDataError("Missing column", code="missing_column", details=["theta1"])
    torques = "power" in header
    frame = _read_frame(path, trajectory_columns(joints, torques))
    if len(frame) < 2:
        raise InputDataError(
            "A trajectory needs at least two samples", code="empty_file", details=str(path)
        )

    def rows(prefix: str) -> np.ndarray:
        return np.vstack([frame["{}{}".format(prefix, j)].to_numpy() for j in range(1, joints + 1)])

    t = frame["t"].to_numpy()
    step = float(t[1] - t[0]) if dt is None else dt
    partial = bool(t[-1] - t[-2] < step * (1 - defaults.DT_TOLERANCE))
    return SampledTrajectory(
        t=t,
        theta=rows("theta"),
        omega=rows("omega"),
        alpha=rows("alpha"),
        dt=step,
        tau=rows("tau") if torques else None,
        power=frame["power"].to_numpy() if torques else None,
        partial_last_step=partial,
    )


def write_json(data: Any, path: PathLike) -> None:
    """Write indented, key sorted JSON."""
    with _writing(path), open(path, "w", encoding="utf-8") as file:
        json.dump(data, file, indent=2, sort_keys=True)
        file.write("\n")
    _LOGGER.debug("Wrote %s", path)

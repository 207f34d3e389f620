import json
import os
from typing import Any, Dict

import pytest

from biotraj import planner
from biotraj.model import PlanningProblem, PlanResult, mapper
from biotraj.utils import data_path


def path(file: str) -> str:
    return os.path.join(os.path.dirname(__file__), file)


def benchmark_config() -> Dict[str, Any]:
    with open(data_path("benchmark.json"), "r") as file:
        return json.loads(file.read())  # type: ignore


def benchmark_problem() -> PlanningProblem:
    return mapper.map_problem(benchmark_config())


@pytest.fixture(scope="session", name="benchmark_result")
def fixture_benchmark_result() -> PlanResult:
    """The benchmark plan, optimized once for the whole session."""
    pso_config = mapper.map_pso_config(benchmark_config()["pso"])
    return planner.optimize_plan(benchmark_problem(), pso_config, workers=0)

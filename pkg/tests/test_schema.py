"""Tests schema."""
import unittest

from schema import SchemaError

from biotraj import schemas
from tests.conftest import benchmark_config


class SchemaTest(unittest.TestCase):
    """Test class."""

    def test_schema_problem_validation(self) -> None:
        """Ensure schema validation doesn't alter the configuration"""
        json_val = benchmark_config()
        self.assertDictEqual(json_val, schemas.PROBLEM.validate(json_val))

    def test_schema_problem_validation_error(self) -> None:
        """Ensure validation fails."""
        for json_val in (
            {"arm": {"l1": 0}},
            {"end_deg": [30]},
            {"duration_s": "3"},
            {"pso": {"swarm_size": 1.5}},
            {"phase": {"weakest": [40, "90"]}},
        ):
            with self.assertRaises(SchemaError):
                schemas.PROBLEM.validate(json_val)

    def test_schema_csv_header(self) -> None:
        schemas.CSV_HEADER.validate(["t", "value"])
        for header in (["t"], ["t", "t"], ["t", " "]):
            with self.assertRaises(SchemaError):
                schemas.CSV_HEADER.validate(header)

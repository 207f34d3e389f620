"""Errors raised by the planning toolkit."""
import functools
from typing import Any, Callable, Optional

import attr


@attr.s
class BiotrajError(Exception):
    """Base exception of the toolkit.

    Args:
        message (str): Human readable description.
        code (str): Machine readable error name, this is what the command line
            reports on stderr.
        details (Any): Extra context (offending value, file, row...).
    """

    message = attr.ib(type=str)
    code = attr.ib(type=str, default="error")
    details = attr.ib(type=Optional[Any], default=None)

    def __str__(self) -> str:
        return f"{self.message}, code: {self.code}, details: {self.details}"


@attr.s
class InputDataError(BiotrajError):
    """This exception is thrown when a recording, a series or a configuration
    file cannot be read or does not respect its format."""

    code = attr.ib(type=str, default="invalid_input")


@attr.s
class ModelError(BiotrajError):
    """This exception is thrown when an operation precondition is violated."""

    code = attr.ib(type=str, default="invalid_model")


@attr.s
class IllConditionedError(ModelError):
    """The mass matrix cannot be inverted reliably, model parameters are
    degenerate."""

    code = attr.ib(type=str, default="ill_conditioned")


@attr.s
class NoPeakFoundError(ModelError):
    """The angular speed of a recording has no interior maximum."""

    code = attr.ib(type=str, default="no_peak_found")


@attr.s
class InfeasiblePlanError(BiotrajError):
    """The best plan found still violates the joint limits."""

    code = attr.ib(type=str, default="infeasible_plan")


def model_errors(code: str = "invalid_model") -> Callable[..., Any]:
    """Turn ``ValueError`` raised by value type validators into
    :class:`ModelError` with the given code."""

    def decorator(func: Callable[..., Any]) -> Any:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            try:
                return func(*args, **kwargs)
            except ValueError as exc:
                raise ModelError(str(exc), code=code, details=func.__name__) from exc

        return wrapper

    return decorator

"""Error types and error handling helpers shared by every pipeline step."""

from __future__ import annotations

from typing import Any, Callable


class KlarnerError(Exception):
    """Base exception for all errors raised by the toolkit.

    ``code`` is a short machine-readable name (``"disconnected"``,
    ``"non-contiguous"``, ``"no-theta"`` ...) so callers and tests can branch
    on the failure kind without parsing the message.
    """

    def __init__(self, code: str, message: str = "") -> None:
        self.code = code
        super().__init__(f"{code}: {message}" if message else code)


class GeometryError(KlarnerError, ValueError):
    """Invalid cell sets, polyomino text or split requests."""


class EnumerationError(KlarnerError, ValueError):
    """Enumeration requests outside the configured limits."""


class TableError(KlarnerError, ValueError):
    """Malformed count tables and out-of-range sequence queries."""


class BoundError(KlarnerError, ValueError):
    """Failures of the generating-function bound pipeline."""


class ConfigError(KlarnerError, ValueError):
    """Invalid run configuration."""


def handle_step_error(name: str, exc: Exception) -> None:
    """Raise a :class:`KlarnerError` with pipeline-step context.

    Parameters
    ----------
    name:
        Name of the step that failed (usually the CLI command).
    exc:
        The original exception encountered while executing the step.
    """

    raise KlarnerError("step-failed", f"step {name} failed: {exc}") from exc


def safe_call(func: Callable[..., Any], name: str, *args: Any, **kwargs: Any) -> Any:
    """Execute ``func``; domain errors pass through, anything else is wrapped."""

    try:
        return func(*args, **kwargs)
    except (KlarnerError, OSError):
        raise
    except Exception as e:
        handle_step_error(name, e)


__all__ = [
    "KlarnerError",
    "GeometryError",
    "EnumerationError",
    "TableError",
    "BoundError",
    "ConfigError",
    "handle_step_error",
    "safe_call",
]

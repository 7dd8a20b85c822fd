"""Run configuration for the command line.

Settings are layered: the packaged ``data/defaults.yaml``, then an optional
user YAML file, then ``KLARNER_<FLAG>`` environment variables, then the
command-line flags themselves.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

import yaml

from .errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULTS_PATH = Path(__file__).resolve().parent / "data" / "defaults.yaml"

COMMANDS = ("enumerate", "derive-q", "verify", "bound-upper", "bound-lower", "u-seq", "compositions", "decompose")
FORMATS = ("text", "json", "tsv")

ENV_PREFIX = "KLARNER_"

# flag name -> RunConfig field
FLAG_FIELDS = {
    "counts": "counts_path",
    "n0": "n0",
    "digits": "digits",
    "lambda_digits": "lambda_digits",
    "max": "n_max",
    "count_limit": "count_limit",
    "stream_limit": "stream_limit",
    "u_cap": "u_cap",
    "format": "output_format",
    "workers": "workers",
    "cache": "cache_path",
}

INT_FIELDS = {"n0", "digits", "lambda_digits", "n_max", "count_limit", "stream_limit", "u_cap", "workers"}


@dataclass
class RunConfig:
    """Everything one invocation needs."""

    command: str = "verify"
    counts_path: Optional[str] = None
    n0: Optional[int] = None
    digits: int = 5
    lambda_digits: int = 4
    n_max: Optional[int] = None
    count_limit: int = 16
    stream_limit: int = 13
    u_cap: int = 2000
    output_format: str = "text"
    workers: Optional[int] = None
    cache_path: Optional[str] = None
    shapes: List[str] = field(default_factory=list)
    direct: bool = False

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError("invalid", f"unknown command {self.command!r}")
        if self.output_format not in FORMATS:
            raise ConfigError("invalid", f"format must be one of {', '.join(FORMATS)}")
        for name in INT_FIELDS:
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ConfigError("invalid", f"{name} must not be negative")

    @classmethod
    def from_yaml(cls, path: str | Path) -> "RunConfig":
        """Load configuration from a YAML file."""
        return cls(**_read_yaml(path))


def _read_yaml(path: str | Path) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as fh:
        raw = yaml.safe_load(fh) or {}
    if not isinstance(raw, dict):
        raise ConfigError("invalid", f"{path}: expected a mapping")
    return _coerce(raw, str(path))


def _coerce(values: Mapping[str, Any], source: str) -> Dict[str, Any]:
    allowed = {f.name for f in fields(RunConfig)}
    out: Dict[str, Any] = {}
    for key, value in values.items():
        if key not in allowed:
            raise ConfigError("unknown-key", f"{source}: unknown setting {key!r}")
        if key in INT_FIELDS and value is not None:
            if isinstance(value, bool):
                raise ConfigError("invalid", f"{source}: {key} must be an integer")
            try:
                value = int(value)
            except (TypeError, ValueError):
                raise ConfigError("invalid", f"{source}: {key} must be an integer, got {value!r}") from None
        out[key] = value
    return out


def _from_environ(environ: Mapping[str, str]) -> Dict[str, Any]:
    values = {}
    for flag, name in FLAG_FIELDS.items():
        raw = environ.get(ENV_PREFIX + flag.upper())
        if raw is not None and raw != "":
            values[name] = raw
    return _coerce(values, "environment")


def load_config(
    cli_values: Mapping[str, Any],
    config_path: Optional[str | Path] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """Merge every configuration layer; ``None`` flag values do not override.

    Parameters
    ----------
    cli_values:
        Values from the command line keyed by ``RunConfig`` field name.
    config_path:
        Optional user YAML file.
    environ:
        Environment mapping, usually ``os.environ``.
    """

    merged: Dict[str, Any] = _read_yaml(DEFAULTS_PATH)
    if config_path is not None:
        merged.update(_read_yaml(config_path))
    if environ is not None:
        merged.update(_from_environ(environ))
    merged.update(_coerce({k: v for k, v in cli_values.items() if v is not None}, "command line"))
    config = RunConfig(**merged)
    logger.debug("configuration: %s", config)
    return config


__all__ = ["RunConfig", "load_config", "COMMANDS", "FORMATS", "FLAG_FIELDS", "ENV_PREFIX"]

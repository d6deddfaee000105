"""
Run configuration for semirep.

Defaults live on the dataclass; ``from_env`` overlays SEMIREP_* variables
(a local .env file is honoured) and the CLI overlays its flags last.
"""

import logging
import os
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from semirep.core.errors import InputError

ENV_PREFIX = "SEMIREP_"

_ENV_FIELDS = {
    "field": ("FIELD", str),
    "seed": ("SEED", int),
    "closure_limit": ("CLOSURE_LIMIT", int),
    "exhaustive_cap": ("EXHAUSTIVE_CAP", int),
    "sample_vectors": ("SAMPLE_VECTORS", int),
    "chop_max_attempts": ("CHOP_ATTEMPTS", int),
    "max_workers": ("MAX_WORKERS", int),
    "log_level": ("LOG_LEVEL", str),
}


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by the pipeline, the chopper and the CLI."""

    field: str = "Q"
    seed: int = 0

    # Semigroup construction
    closure_limit: int = 100000

    # Simplicity and chopping
    exhaustive_cap: int = 2 ** 20
    sample_vectors: int = 64
    chop_max_attempts: int = 64

    # Parallelism
    max_workers: int = 4

    log_level: str = "WARNING"

    def __post_init__(self):
        for name in ("closure_limit", "exhaustive_cap", "max_workers"):
            if getattr(self, name) < 1:
                raise InputError(f"{name} must be positive")
        for name in ("sample_vectors", "chop_max_attempts", "seed"):
            if getattr(self, name) < 0:
                raise InputError(f"{name} must be non-negative")

    @property
    def logging_level(self) -> int:
        level = logging.getLevelName(self.log_level.upper())
        return level if isinstance(level, int) else logging.WARNING

    def with_overrides(self, **overrides: Optional[Any]) -> "RunConfig":
        """Copy with every non-None override applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    @classmethod
    def from_env(cls, environ: Optional[Dict[str, str]] = None) -> "RunConfig":
        if environ is None:
            load_dotenv()
            environ = dict(os.environ)
        values: Dict[str, Any] = {}
        for name, (suffix, cast) in _ENV_FIELDS.items():
            raw = environ.get(ENV_PREFIX + suffix)
            if raw is None or raw == "":
                continue
            try:
                values[name] = cast(raw)
            except ValueError as e:
                raise InputError(f"{ENV_PREFIX}{suffix}={raw!r}: {e}") from e
        return cls(**values)


def get_default_config() -> RunConfig:
    """Get the default run configuration."""
    return RunConfig()

"""Runtime settings with environment overrides."""
from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Callable, Final, Mapping, Optional, TypeVar

from ..core.errors import InvalidArgumentError

DEFAULT_EXACT_LIMIT: Final[int] = 128
DEFAULT_TOLERANCE: Final[float] = 1e-6
DEFAULT_ISOMORPHISM_BUDGET: Final[int] = 200_000
DEFAULT_RANDOM_SAMPLES: Final[int] = 10_000
DEFAULT_SEED: Final[int] = 2024

ENV_EXACT_LIMIT: Final[str] = "CLIQUEGRAPH_EXACT_LIMIT"
ENV_TOLERANCE: Final[str] = "CLIQUEGRAPH_TOLERANCE"
ENV_ISOMORPHISM_BUDGET: Final[str] = "CLIQUEGRAPH_ISO_BUDGET"
ENV_RANDOM_SAMPLES: Final[str] = "CLIQUEGRAPH_SAMPLES"

T = TypeVar("T", int, float)


@dataclass(frozen=True)
class Settings:
    exact_limit: int = DEFAULT_EXACT_LIMIT
    numeric_tolerance: float = DEFAULT_TOLERANCE
    isomorphism_budget: int = DEFAULT_ISOMORPHISM_BUDGET
    random_samples: int = DEFAULT_RANDOM_SAMPLES
    seed: int = DEFAULT_SEED

    def with_overrides(self, **changes: object) -> "Settings":
        present = {key: value for key, value in changes.items() if value is not None}
        return replace(self, **present)  # type: ignore[arg-type]


def _read(env: Mapping[str, str], name: str, parse: Callable[[str], T], default: T) -> T:
    raw = env.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = parse(raw)
    except ValueError as exc:
        raise InvalidArgumentError(f"{name}={raw!r} is not a valid {parse.__name__}") from exc
    if value <= 0:
        raise InvalidArgumentError(f"{name} must be positive, got {raw!r}")
    return value


def load_settings(env: Optional[Mapping[str, str]] = None) -> Settings:
    """Build settings from defaults plus environment overrides."""
    source = os.environ if env is None else env
    return Settings(
        exact_limit=_read(source, ENV_EXACT_LIMIT, int, DEFAULT_EXACT_LIMIT),
        numeric_tolerance=_read(source, ENV_TOLERANCE, float, DEFAULT_TOLERANCE),
        isomorphism_budget=_read(source, ENV_ISOMORPHISM_BUDGET, int, DEFAULT_ISOMORPHISM_BUDGET),
        random_samples=_read(source, ENV_RANDOM_SAMPLES, int, DEFAULT_RANDOM_SAMPLES),
    )

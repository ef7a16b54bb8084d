from __future__ import annotations

import pytest

from cliquegraph.core.errors import InvalidArgumentError
from cliquegraph.data.settings import (
    DEFAULT_EXACT_LIMIT,
    DEFAULT_TOLERANCE,
    ENV_EXACT_LIMIT,
    ENV_TOLERANCE,
    load_settings,
)


def test_defaults_without_environment() -> None:
    settings = load_settings({})
    assert settings.exact_limit == DEFAULT_EXACT_LIMIT
    assert settings.numeric_tolerance == DEFAULT_TOLERANCE


def test_environment_overrides() -> None:
    settings = load_settings({ENV_EXACT_LIMIT: "64", ENV_TOLERANCE: "1e-9"})
    assert settings.exact_limit == 64
    assert settings.numeric_tolerance == 1e-9


def test_blank_values_fall_back_to_defaults() -> None:
    assert load_settings({ENV_EXACT_LIMIT: "  "}).exact_limit == DEFAULT_EXACT_LIMIT


@pytest.mark.parametrize("raw", ["abc", "0", "-5"])
def test_invalid_values_are_rejected(raw: str) -> None:
    with pytest.raises(InvalidArgumentError):
        load_settings({ENV_EXACT_LIMIT: raw})


def test_with_overrides_skips_missing_values() -> None:
    settings = load_settings({}).with_overrides(exact_limit=10, numeric_tolerance=None)
    assert settings.exact_limit == 10
    assert settings.numeric_tolerance == DEFAULT_TOLERANCE

from __future__ import annotations

import json
import math

import pytest

from osserman import OssermanError, SamplingError
from osserman._utilities import dumps, halton_points


def test_halton_points_are_deterministic_and_accepted() -> None:
    accept = lambda x, y: x * x + y * y < 1.0  # noqa: E731
    first = halton_points(accept, (-1.0, 1.0, -1.0, 1.0), 25, seed=3)
    assert first == halton_points(accept, (-1.0, 1.0, -1.0, 1.0), 25, seed=3)
    assert len(first) == 25
    assert all(accept(x, y) for x, y in first)


def test_exhausted_sampling_is_a_library_error() -> None:
    with pytest.raises(SamplingError) as info:
        halton_points(lambda x, y: False, (0.0, 1.0, 0.0, 1.0), 3, max_draws=100)
    assert isinstance(info.value, OssermanError)
    assert info.value.data["cause"] == "SamplingError"
    assert info.value.data["severity"] == "common"


def test_dumps_replaces_non_finite_floats() -> None:
    payload = json.loads(dumps({"b": math.inf, "a": [1.0, math.nan]}))
    assert payload == {"a": [1.0, None], "b": None}

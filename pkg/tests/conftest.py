"""Session-wide fixtures: classification runs are expensive and shared."""

from __future__ import annotations

import time

import pytest

try:
    from hypothesis import HealthCheck, settings

    settings.register_profile(
        "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
    )
    settings.load_profile("suite")
except ImportError:  # pragma: no cover
    pass

from lcodes.classify import classify_self_dual

_CACHE: dict = {}


def classification(n: int, even_only: bool = False):
    """Cached (records, wall-seconds) for one classification run."""
    key = (n, even_only)
    if key not in _CACHE:
        start = time.perf_counter()
        records = classify_self_dual(n, even_only=even_only)
        _CACHE[key] = (records, time.perf_counter() - start)
    return _CACHE[key]


@pytest.fixture(scope="session")
def classified():
    return classification

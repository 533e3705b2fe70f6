"""Pytest fixtures and configuration."""

from __future__ import annotations

from collections.abc import Generator

import numpy as np
import pytest

from src.xxzring.core import presets as presets_module
from src.xxzring.core.config import get_settings
from src.xxzring.schemas.ring import RingSpec
from src.xxzring.services import entanglement_service


@pytest.fixture(autouse=True)
def fresh_singletons() -> Generator[None, None, None]:
    """Rebuild settings, presets and the shared pipeline for every test."""
    get_settings.cache_clear()
    presets_module._preset_manager = None
    entanglement_service._pipeline = None
    yield
    get_settings.cache_clear()
    presets_module._preset_manager = None
    entanglement_service._pipeline = None


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def uniform_ring() -> RingSpec:
    """Ten-site impurity-free ring at the figure parameters."""
    return RingSpec(n=10, j=1.0, jz=0.65, b=0.4, temperature=1.0)


@pytest.fixture
def small_ring() -> RingSpec:
    """Three-site uniform ring at the figure parameters."""
    return RingSpec(n=3, j=1.0, jz=0.65, b=0.4, temperature=1.0)


def random_spec(rng: np.random.Generator, n: int) -> RingSpec:
    """Random ring with full-rank Gibbs state (T bounded away from 0)."""
    count = int(rng.integers(0, n + 1))
    impurities = sorted(int(s) for s in rng.choice(np.arange(1, n + 1), size=count, replace=False))
    return RingSpec(
        n=n,
        j=float(rng.uniform(-1.2, 1.2)),
        jz=float(rng.uniform(-1.2, 1.2)),
        b=float(rng.uniform(0.0, 1.0)),
        temperature=float(rng.uniform(0.8, 3.0)),
        impurities=tuple(impurities),
        alpha=float(rng.uniform(0.0, 2.0)),
        beta=float(rng.uniform(0.0, 2.0)),
    )

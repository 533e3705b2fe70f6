"""End-to-end checks of the physical properties the simulator must reproduce."""
from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from src.xxzring.core.presets import preset
from src.xxzring.models.operators import popcounts
from src.xxzring.repositories.sweep_repository import SweepRepository
from src.xxzring.schemas.entanglement import QubitPair
from src.xxzring.schemas.sweep import SweepPlan
from src.xxzring.services.entanglement_service import (
    ThermalPipeline,
    nearest_neighbor_pairs,
    nearest_neighbor_profile,
    pair_concurrence,
)
from src.xxzring.services.hamiltonian_service import build_hamiltonian
from src.xxzring.services.ring_service import derive_bonds
from src.xxzring.services.sweep_service import critical_temperature, run_sweep
from src.xxzring.services.thermal_service import eigendecompose
from tests.conftest import random_spec
from tests.oracle import brute_force_concurrence

PLANS = Path(__file__).resolve().parents[2] / "plans"


def _c(spec, i: int, j: int) -> float:
    return pair_concurrence(spec, QubitPair.of(i, j)).value


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_matches_independent_pipeline(rng, n):
    for _ in range(10):
        spec = random_spec(rng, n)
        pair = QubitPair.of(1, 2) if rng.random() < 0.5 else QubitPair.of(n - 1, n)
        expected = brute_force_concurrence(
            n, spec.j, spec.jz, spec.b, spec.temperature,
            spec.impurities, spec.alpha, spec.beta, (pair.i, pair.j),
        )
        assert pair_concurrence(spec, pair).value == pytest.approx(expected, abs=1e-9)


def test_uniform_ring_pairs_are_equal(uniform_ring):
    values = np.array([r.value for r in nearest_neighbor_profile(uniform_ring)])
    assert np.ptp(values) <= 1e-10
    assert values[0] > 0.0


@pytest.mark.parametrize("alpha", [0.1, 0.8, 2.0])
def test_reflection_about_the_impurity_axis(alpha):
    spec = preset("fig1a").with_overrides(alpha=alpha)
    mirrored = [((4, 5), (5, 6)), ((3, 4), (6, 7)), ((2, 3), (7, 8)), ((1, 2), (8, 9)), ((9, 10), (10, 1))]
    for left, right in mirrored:
        assert _c(spec, *left) == pytest.approx(_c(spec, *right), abs=1e-10)


def test_weak_impurity_bonds_decouple_and_pure_segment_oscillates():
    spec = preset("fig1b").with_overrides(alpha=0.1)
    for bond in [(3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9)]:
        assert _c(spec, *bond) < 1e-3
    segment = [_c(spec, 9, 10), _c(spec, 10, 1), _c(spec, 1, 2), _c(spec, 2, 3)]
    assert max(segment) - min(segment) > 1e-3


def test_strong_impurity_bond_enhances_entanglement():
    spec = preset("fig1b")
    pair = QubitPair.of(3, 4)
    weak, strong = spec.with_overrides(alpha=1.0), spec.with_overrides(alpha=2.0)
    assert pair_concurrence(strong, pair).value > pair_concurrence(weak, pair).value
    assert critical_temperature(strong, pair, 1.0, 10.0, 1e-3) > critical_temperature(weak, pair, 1.0, 10.0, 1e-3)


def test_double_bond_strength_is_local():
    plan = SweepPlan.model_validate(
        {
            "base": preset("fig5b").with_overrides(alpha=0.8).model_dump(),
            "axis1": {"param": "beta", "start": 0.0, "stop": 3.0, "step": 0.25},
            "pairs": [[1, 2], [7, 8]],
        }
    )
    rows = run_sweep(plan).rows
    far = [row.concurrence for row in rows if row.pair == "1-2"]
    near = [row.concurrence for row in rows if row.pair == "7-8"]
    assert 10 * np.ptp(far) <= np.ptp(near)


def test_random_states_are_valid(rng):
    pipeline = ThermalPipeline()
    for _ in range(25):
        n = int(rng.integers(3, 11))
        spec = random_spec(rng, n)
        rho = pipeline.thermal_state(spec)
        assert rho.is_valid()
        counts = popcounts(n)
        assert np.max(np.abs(rho.entries[counts[:, None] != counts[None, :]])) <= 1e-12
        for result in pipeline.pair_concurrences(spec, nearest_neighbor_pairs(n)):
            assert 0.0 <= result.value <= 1.0 + 1e-12


@pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
def test_block_spectrum_matches_dense(alpha):
    spec = preset("fig1a").with_overrides(alpha=alpha)
    h = build_hamiltonian(spec, derive_bonds(spec))
    np.testing.assert_allclose(
        eigendecompose(h, use_sz_blocks=True).eigenvalues,
        eigendecompose(h, use_sz_blocks=False).eigenvalues,
        atol=1e-9,
    )


@pytest.mark.slow
def test_shipped_plan_is_deterministic():
    repository = SweepRepository()
    plan = repository.load_plan(PLANS / "fig2a.json")
    first = repository.render_csv(run_sweep(plan, max_workers=1))
    second = repository.render_csv(run_sweep(plan))
    assert first == second
    assert first.count("\n") == plan.expected_rows() + 1

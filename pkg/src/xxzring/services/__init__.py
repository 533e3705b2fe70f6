"""Services package - the computational pipeline."""
from .entanglement_service import (
    ThermalPipeline,
    concurrence,
    nearest_neighbor_profile,
    pair_concurrence,
    partial_trace_pair,
    spin_flip_tilde,
)
from .hamiltonian_service import build_hamiltonian, reassemble, split_sz_blocks
from .ring_service import derive_bonds, load_ring_spec
from .sweep_service import critical_temperature, run_sweep
from .thermal_service import eigendecompose, gibbs_state, ground_state

__all__ = [
    "ThermalPipeline",
    "build_hamiltonian",
    "concurrence",
    "critical_temperature",
    "derive_bonds",
    "eigendecompose",
    "gibbs_state",
    "ground_state",
    "load_ring_spec",
    "nearest_neighbor_profile",
    "pair_concurrence",
    "partial_trace_pair",
    "reassemble",
    "run_sweep",
    "spin_flip_tilde",
    "split_sz_blocks",
]

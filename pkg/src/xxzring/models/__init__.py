"""Models package - numeric containers and shared enums."""
from .enums import BondKind, SweepParameter
from .operators import HamiltonianMatrix, SzBlocks, SzSector
from .states import DensityMatrix, SpectralDecomposition

__all__ = [
    "BondKind",
    "SweepParameter",
    "HamiltonianMatrix",
    "SzBlocks",
    "SzSector",
    "DensityMatrix",
    "SpectralDecomposition",
]

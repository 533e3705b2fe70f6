"""Spectral and density-matrix containers."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .operators import _frozen


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending eigenvalues and orthonormal eigenvectors; column k pairs with eigenvalue k."""

    n: int
    eigenvalues: NDArray[np.float64]
    eigenvectors: NDArray[np.float64]

    def __post_init__(self) -> None:
        _frozen(self.eigenvalues)
        _frozen(self.eigenvectors)

    @property
    def dim(self) -> int:
        return int(self.eigenvalues.shape[0])

    @property
    def ground_energy(self) -> float:
        return float(self.eigenvalues[0])


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix with a provenance label."""

    entries: NDArray[np.float64] | NDArray[np.complex128]
    label: str = ""

    def __post_init__(self) -> None:
        _frozen(self.entries)  # type: ignore[arg-type]

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def trace(self) -> float:
        return float(np.real(np.trace(self.entries)))

    def purity(self) -> float:
        """tr(rho^2); equals sum |rho_pq|^2 for Hermitian rho."""
        return float(np.sum(np.abs(self.entries) ** 2))

    def hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.entries)[0])

    def is_valid(
        self,
        trace_tol: float = 1e-10,
        hermitian_tol: float = 1e-12,
        psd_tol: float = 1e-10,
    ) -> bool:
        """Check unit trace, Hermiticity and positive semidefiniteness."""
        return (
            abs(self.trace() - 1.0) <= trace_tol
            and self.hermiticity_error() <= hermitian_tol
            and self.min_eigenvalue() >= -psd_tol
        )

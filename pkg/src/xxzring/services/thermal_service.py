"""
Thermal Service.

Eigendecomposes the Hamiltonian once and builds Gibbs states
rho = exp(-H/T)/Z for any number of temperatures from that spectrum
(k_B = 1). Boltzmann weights are shifted by the ground energy so that small
temperatures do not overflow.
"""
from __future__ import annotations

import numpy as np
import scipy.linalg
import structlog
from numpy.typing import NDArray

from ..core.config import get_settings
from ..core.exceptions import ConvergenceError, DomainError
from ..models.operators import HamiltonianMatrix, SzBlocks
from ..models.states import DensityMatrix, SpectralDecomposition
from .hamiltonian_service import split_sz_blocks

logger = structlog.get_logger(__name__)


def _eigh(matrix: NDArray[np.float64]) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    try:
        return scipy.linalg.eigh(matrix, check_finite=True)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise ConvergenceError(f"Symmetric eigensolver failed: {e}")


def _verify(h: HamiltonianMatrix, decomp: SpectralDecomposition) -> None:
    """Residual and orthonormality checks against the configured tolerances."""
    settings = get_settings()
    vectors = decomp.eigenvectors
    scale = max(1.0, float(np.max(np.sum(np.abs(h.entries), axis=1))))
    residual = float(np.max(np.abs(h.entries @ vectors - vectors * decomp.eigenvalues)))
    if residual > settings.EIGEN_RESIDUAL_TOL * scale:
        raise ConvergenceError(
            f"Eigen residual {residual:.3e} exceeds tolerance", residual_norm=residual
        )
    gram_error = float(np.max(np.abs(vectors.T @ vectors - np.eye(decomp.dim))))
    if gram_error > settings.ORTHONORMALITY_TOL:
        raise ConvergenceError(
            f"Eigenvectors not orthonormal (deviation {gram_error:.3e})",
            residual_norm=gram_error,
        )


def eigendecompose_dense(h: HamiltonianMatrix) -> SpectralDecomposition:
    """Diagonalize the full 2^n matrix."""
    eigenvalues, eigenvectors = _eigh(h.entries)
    return SpectralDecomposition(n=h.n, eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def eigendecompose_blocks(blocks: SzBlocks) -> SpectralDecomposition:
    """Diagonalize each Sz sector and scatter the eigenvectors into the full basis."""
    dim = blocks.dim
    eigenvalues = np.empty(dim, dtype=np.float64)
    eigenvectors = np.zeros((dim, dim), dtype=np.float64)
    column = 0
    for sector in blocks.sectors:
        values, vectors = _eigh(sector.block)
        stop = column + sector.size
        eigenvalues[column:stop] = values
        eigenvectors[sector.indices, column:stop] = vectors
        column = stop

    order = np.argsort(eigenvalues, kind="stable")
    return SpectralDecomposition(
        n=blocks.n,
        eigenvalues=eigenvalues[order],
        eigenvectors=np.ascontiguousarray(eigenvectors[:, order]),
    )


def eigendecompose(h: HamiltonianMatrix, use_sz_blocks: bool | None = None) -> SpectralDecomposition:
    """
    Ascending eigenvalues with orthonormal eigenvectors of ``h``.

    Degenerate eigenspaces come back in an arbitrary orthonormal basis;
    downstream only spectral functions of H are used.

    Raises:
        ConvergenceError: If LAPACK fails or the residual check fails
    """
    if use_sz_blocks is None:
        use_sz_blocks = get_settings().USE_SZ_BLOCKS
    if use_sz_blocks:
        decomp = eigendecompose_blocks(split_sz_blocks(h))
    else:
        decomp = eigendecompose_dense(h)
    _verify(h, decomp)
    logger.debug(
        "spectrum_computed",
        n=h.n,
        sz_blocks=use_sz_blocks,
        ground_energy=decomp.ground_energy,
    )
    return decomp


def boltzmann_weights(eigenvalues: NDArray[np.float64], temperature: float) -> NDArray[np.float64]:
    """w_k = exp(-(E_k - E_0)/T) / sum_j exp(-(E_j - E_0)/T)."""
    weights = np.exp(-(eigenvalues - eigenvalues[0]) / temperature)
    return weights / np.sum(weights)


def _mixture(decomp: SpectralDecomposition, weights: NDArray[np.float64], label: str) -> DensityMatrix:
    keep = weights > 0.0
    vectors = decomp.eigenvectors[:, keep]
    rho = (vectors * weights[keep]) @ vectors.T
    rho = 0.5 * (rho + rho.T)
    return DensityMatrix(entries=rho, label=label)


def gibbs_state(decomp: SpectralDecomposition, temperature: float) -> DensityMatrix:
    """
    Thermal state exp(-H/T)/Z assembled from the spectrum.

    Raises:
        DomainError: If ``temperature <= 0`` (use ``ground_state`` for T = 0)
    """
    if not temperature > 0.0:
        raise DomainError(
            f"Gibbs state needs T > 0, got {temperature}; use ground_state for T = 0",
            details={"temperature": temperature},
        )
    weights = boltzmann_weights(decomp.eigenvalues, temperature)
    return _mixture(decomp, weights, label=f"gibbs(T={temperature:g})")


def ground_state(decomp: SpectralDecomposition, degeneracy_tol: float | None = None) -> DensityMatrix:
    """Uniform mixture over eigenvectors with E_k <= E_0 + degeneracy_tol (the T -> 0+ limit)."""
    if degeneracy_tol is None:
        degeneracy_tol = get_settings().DEGENERACY_TOL
    if not degeneracy_tol > 0.0:
        raise DomainError(
            f"degeneracy_tol must be positive, got {degeneracy_tol}",
            details={"degeneracy_tol": degeneracy_tol},
        )
    manifold = decomp.eigenvalues <= decomp.eigenvalues[0] + degeneracy_tol
    weights = manifold / np.count_nonzero(manifold)
    return _mixture(decomp, weights.astype(np.float64), label=f"ground(deg={int(np.count_nonzero(manifold))})")


def thermal_energy(rho: DensityMatrix, h: HamiltonianMatrix) -> float:
    """tr(rho H)."""
    return float(np.real(np.sum(rho.entries * h.entries.T)))

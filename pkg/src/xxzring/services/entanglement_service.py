"""
Entanglement Service.

Reduces a ring state to a qubit pair and evaluates the Wootters concurrence

    C = max(0, 2 max(lambda) - sum(lambda)) = max(0, l1 - l2 - l3 - l4)

where the lambdas are the square roots of the eigenvalues of
R = rho (sy x sy) rho* (sy x sy), in descending order. The spectrum of R is
taken from the Hermitian matrix sqrt(rho) rho~ sqrt(rho), which has the same
characteristic polynomial.

Reduced states are ordered (lower site, higher site); the local index of a
site equals its bit value, so index 3 is |up,up>.
"""
from __future__ import annotations

import string
import threading
from collections import OrderedDict
from collections.abc import Iterable

import numpy as np
import structlog
from numpy.typing import NDArray

from ..core.config import get_settings
from ..core.exceptions import ContractError, InvalidStateError
from ..models.operators import HamiltonianMatrix
from ..models.states import DensityMatrix, SpectralDecomposition
from ..schemas.entanglement import ConcurrenceResult, QubitPair
from ..schemas.ring import RingSpec
from .hamiltonian_service import build_hamiltonian
from .ring_service import derive_bonds
from .thermal_service import eigendecompose, gibbs_state

logger = structlog.get_logger(__name__)

# sy x sy in the two-qubit computational basis; real and antidiagonal
SIGMA_YY = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)
_FLIP_SIGNS = np.array([-1.0, 1.0, 1.0, -1.0])


def nearest_neighbor_pairs(n: int) -> list[QubitPair]:
    """Pairs (i, i+1) for i = 1..n, the last one being (n, 1)."""
    return [QubitPair.of(i, i % n + 1) for i in range(1, n + 1)]


def partial_trace_pair(rho: DensityMatrix, pair: QubitPair, n: int) -> DensityMatrix:
    """
    Reduced 4x4 state of ``pair`` with every other site traced out.

    Raises:
        ContractError: If ``rho`` is not 2^n dimensional or the pair is outside the ring
    """
    if rho.dim != 1 << n:
        raise ContractError(
            message=f"density matrix of dimension {rho.dim} does not describe {n} qubits",
            details={"dim": rho.dim, "n": n},
        )
    pair.check_within(n)

    # Row-major reshape puts the most significant bit (site n) on the first axis
    letters = iter(string.ascii_letters)
    row = {site: next(letters) for site in range(1, n + 1)}
    col = {site: (next(letters) if site in (pair.i, pair.j) else row[site]) for site in range(1, n + 1)}
    sites = range(n, 0, -1)
    subscripts = (
        "".join(row[s] for s in sites)
        + "".join(col[s] for s in sites)
        + "->"
        + row[pair.i] + row[pair.j] + col[pair.i] + col[pair.j]
    )
    tensor = rho.entries.reshape((2,) * (2 * n))
    reduced = np.einsum(subscripts, tensor).reshape(4, 4)
    reduced = 0.5 * (reduced + reduced.conj().T)
    return DensityMatrix(entries=reduced, label=f"{rho.label}|pair {pair.label}")


def spin_flip_tilde(rho4: DensityMatrix) -> NDArray[np.float64] | NDArray[np.complex128]:
    """
    (sy x sy) rho* (sy x sy).

    The conjugation reverses both indices and multiplies entry (a, b) by
    s_a s_b with s = (-1, 1, 1, -1).
    """
    flipped = rho4.entries[::-1, ::-1].conj()
    return np.outer(_FLIP_SIGNS, _FLIP_SIGNS) * flipped


def spin_flip_tilde_explicit(rho4: DensityMatrix) -> NDArray[np.float64] | NDArray[np.complex128]:
    """Reference form of ``spin_flip_tilde`` by explicit matrix products."""
    return SIGMA_YY @ rho4.entries.conj() @ SIGMA_YY


def _sqrt_psd(matrix: NDArray[np.float64] | NDArray[np.complex128]) -> NDArray[np.complex128]:
    values, vectors = np.linalg.eigh(matrix)
    roots = np.sqrt(np.clip(values, 0.0, None))
    return (vectors * roots) @ vectors.conj().T


def concurrence(rho4: DensityMatrix) -> ConcurrenceResult:
    """
    Wootters concurrence of a two-qubit state, pure or mixed.

    Raises:
        ContractError: If ``rho4`` is not 4x4
        InvalidStateError: If R has an eigenvalue below -NEGATIVE_EIGENVALUE_TOL
    """
    if rho4.dim != 4:
        raise ContractError(
            message=f"concurrence needs a 4x4 state, got {rho4.dim}x{rho4.dim}",
            details={"dim": rho4.dim},
        )
    tolerance = get_settings().NEGATIVE_EIGENVALUE_TOL

    root = _sqrt_psd(rho4.entries)
    product = root @ spin_flip_tilde(rho4) @ root
    product = 0.5 * (product + product.conj().T)
    eigenvalues = np.linalg.eigvalsh(product)

    smallest = float(eigenvalues[0])
    if smallest < -tolerance:
        raise InvalidStateError(
            f"R has eigenvalue {smallest:.3e} below -{tolerance:g}; input is not a valid state",
            min_eigenvalue=smallest,
        )

    lambdas = np.sort(np.sqrt(np.clip(eigenvalues, 0.0, None)))[::-1]
    as_tuple = (float(lambdas[0]), float(lambdas[1]), float(lambdas[2]), float(lambdas[3]))
    return ConcurrenceResult(value=ConcurrenceResult.from_lambdas(as_tuple), lambdas=as_tuple)


class ThermalPipeline:
    """
    Memoized spec -> H -> spectrum -> Gibbs state pipeline.

    One spectrum is kept per Hamiltonian (a RingSpec minus its temperature)
    and one Gibbs state per (Hamiltonian, temperature), so the N pair
    evaluations of a ring and every temperature of a sweep share the work.
    Safe to use from several threads.
    """

    def __init__(self, max_spectra: int = 8, max_states: int = 16) -> None:
        self._max_spectra = max_spectra
        self._max_states = max_states
        self._spectra: OrderedDict[tuple[object, ...], tuple[HamiltonianMatrix, SpectralDecomposition]] = OrderedDict()
        self._states: OrderedDict[tuple[object, ...], DensityMatrix] = OrderedDict()
        self._lock = threading.Lock()
        self._key_locks: dict[tuple[object, ...], threading.Lock] = {}

    def _key_lock(self, key: tuple[object, ...]) -> threading.Lock:
        with self._lock:
            return self._key_locks.setdefault(key, threading.Lock())

    @staticmethod
    def _remember(cache: OrderedDict, key: tuple[object, ...], value: object, limit: int) -> list[tuple[object, ...]]:  # type: ignore[type-arg]
        """Insert ``key`` as most recent and return the keys evicted to stay within ``limit``."""
        cache[key] = value
        cache.move_to_end(key)
        evicted: list[tuple[object, ...]] = []
        while len(cache) > limit:
            evicted.append(cache.popitem(last=False)[0])
        return evicted

    def hamiltonian_and_spectrum(self, spec: RingSpec) -> tuple[HamiltonianMatrix, SpectralDecomposition]:
        key = spec.hamiltonian_key()
        with self._key_lock(key):
            with self._lock:
                cached = self._spectra.get(key)
            if cached is not None:
                return cached
            try:
                h = build_hamiltonian(spec, derive_bonds(spec))
                result = (h, eigendecompose(h))
            except Exception:
                with self._lock:
                    self._key_locks.pop(key, None)
                raise
            with self._lock:
                # locks live only as long as their cached spectrum
                for evicted in self._remember(self._spectra, key, result, self._max_spectra):
                    self._key_locks.pop(evicted, None)
            return result

    def spectrum(self, spec: RingSpec) -> SpectralDecomposition:
        return self.hamiltonian_and_spectrum(spec)[1]

    def thermal_state(self, spec: RingSpec) -> DensityMatrix:
        key = (*spec.hamiltonian_key(), spec.temperature)
        with self._lock:
            cached = self._states.get(key)
        if cached is not None:
            return cached
        rho = gibbs_state(self.spectrum(spec), spec.temperature)
        with self._lock:
            self._remember(self._states, key, rho, self._max_states)
        return rho

    def pair_concurrence(self, spec: RingSpec, pair: QubitPair) -> ConcurrenceResult:
        rho = self.thermal_state(spec)
        return concurrence(partial_trace_pair(rho, pair, spec.n)).with_pair(pair)

    def pair_concurrences(self, spec: RingSpec, pairs: Iterable[QubitPair]) -> list[ConcurrenceResult]:
        rho = self.thermal_state(spec)
        return [concurrence(partial_trace_pair(rho, pair, spec.n)).with_pair(pair) for pair in pairs]

    def clear(self) -> None:
        with self._lock:
            self._spectra.clear()
            self._states.clear()
            self._key_locks.clear()


# -----------------------------------------------------------------------------
# Singleton Pattern with Lazy Initialization
# -----------------------------------------------------------------------------

_pipeline: ThermalPipeline | None = None


def get_thermal_pipeline() -> ThermalPipeline:
    """Get the process-wide pipeline instance."""
    global _pipeline
    if _pipeline is None:
        _pipeline = ThermalPipeline()
    return _pipeline


def pair_concurrence(spec: RingSpec, pair: QubitPair) -> ConcurrenceResult:
    """End to end: H -> Gibbs rho -> reduced pair state -> concurrence."""
    return get_thermal_pipeline().pair_concurrence(spec, pair)


def nearest_neighbor_profile(spec: RingSpec) -> list[ConcurrenceResult]:
    """C_{i,i+1} for every bond of the ring, bond 1 first."""
    return get_thermal_pipeline().pair_concurrences(spec, nearest_neighbor_pairs(spec.n))

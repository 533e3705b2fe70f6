"""Operator containers.

Dense Hamiltonian matrices in the computational basis and their total-Sz
sector blocks. Basis index k encodes site s (1-based) in bit s-1; a set bit
is spin up.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray


def _frozen(array: NDArray[np.float64]) -> NDArray[np.float64]:
    array.setflags(write=False)
    return array


def popcounts(n: int) -> NDArray[np.int64]:
    """Number of up spins of every basis index in ``[0, 2^n)``."""
    k = np.arange(1 << n, dtype=np.int64)
    counts = np.zeros_like(k)
    for site in range(n):
        counts += (k >> site) & 1
    return counts


@dataclass(frozen=True)
class HamiltonianMatrix:
    """Real symmetric 2^n x 2^n Hamiltonian."""

    n: int
    entries: NDArray[np.float64]

    def __post_init__(self) -> None:
        _frozen(self.entries)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])


@dataclass(frozen=True)
class SzSector:
    """Hamiltonian restricted to basis states with ``magnetization`` up spins."""

    magnetization: int
    indices: NDArray[np.int64]
    block: NDArray[np.float64]

    def __post_init__(self) -> None:
        _frozen(self.indices)
        _frozen(self.block)

    @property
    def size(self) -> int:
        return int(self.indices.shape[0])


@dataclass(frozen=True)
class SzBlocks:
    """The n+1 magnetization sectors of a Hamiltonian, ordered by up-spin count."""

    n: int
    sectors: tuple[SzSector, ...] = field(default_factory=tuple)

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def sizes(self) -> list[int]:
        return [sector.size for sector in self.sectors]

"""
Hamiltonian Service.

Assembles the dense XXZ ring Hamiltonian

    H = sum_i 1/2 [J_i (sx_i sx_{i+1} + sy_i sy_{i+1}) + Jz_i sz_i sz_{i+1}] + B sum_i sz_i

with Pauli matrices (eigenvalues +-1), and splits it into total-Sz sectors.
The field term is the ring sum 1/2 sum_i B (sz_i + sz_{i+1}) with the 1/2
cancelled, since every site belongs to two bonds.

Basis: index k holds site s (1-based) in bit s-1, bit value 1 is spin up.
"""
from __future__ import annotations

import csv
from pathlib import Path

import numpy as np
import structlog
from numpy.typing import NDArray

from ..core.config import get_settings
from ..core.exceptions import ContractError, ResourceLimitError
from ..models.operators import HamiltonianMatrix, SzBlocks, SzSector, popcounts
from ..schemas.ring import BondTable, RingSpec

logger = structlog.get_logger(__name__)


def spin_signs(n: int, site: int) -> NDArray[np.float64]:
    """sz eigenvalue (+1 up, -1 down) of 1-based ``site`` for every basis index."""
    k = np.arange(1 << n, dtype=np.int64)
    return 2.0 * ((k >> (site - 1)) & 1) - 1.0


def build_hamiltonian(spec: RingSpec, bonds: BondTable) -> HamiltonianMatrix:
    """
    Dense Hamiltonian of the ring described by ``spec`` with couplings ``bonds``.

    Raises:
        ResourceLimitError: If ``spec.n`` exceeds ``MAX_SITES``
        ContractError: If ``bonds`` was derived for a different ring size
    """
    max_sites = get_settings().MAX_SITES
    if spec.n > max_sites:
        raise ResourceLimitError(spec.n, max_sites)
    if bonds.n != spec.n:
        raise ContractError(
            message=f"bond table for {bonds.n} sites used with a ring of {spec.n}",
            details={"bonds_n": bonds.n, "spec_n": spec.n},
        )

    n = spec.n
    dim = 1 << n
    k = np.arange(dim, dtype=np.int64)
    entries = np.zeros((dim, dim), dtype=np.float64)
    diagonal = np.zeros(dim, dtype=np.float64)

    for bond in bonds.bonds:
        a, b = bond.sites
        s_a = spin_signs(n, a)
        s_b = spin_signs(n, b)
        diagonal += 0.5 * bond.jz_eff * s_a * s_b

        # (sx sx + sy sy) maps |up,down> <-> |down,up> with amplitude 2
        flippable = k[s_a != s_b]
        partner = flippable ^ ((1 << (a - 1)) | (1 << (b - 1)))
        entries[flippable, partner] += bond.j_eff

    diagonal += spec.b * (2.0 * popcounts(n) - n)
    entries[k, k] += diagonal

    logger.debug("hamiltonian_built", n=n, dim=dim, impurities=list(spec.impurities))
    return HamiltonianMatrix(n=n, entries=entries)


def split_sz_blocks(h: HamiltonianMatrix) -> SzBlocks:
    """Restrict H to each fixed-up-spin-count sector, m = 0..n."""
    counts = popcounts(h.n)
    sectors = []
    for m in range(h.n + 1):
        indices = np.flatnonzero(counts == m).astype(np.int64)
        block = np.ascontiguousarray(h.entries[np.ix_(indices, indices)])
        sectors.append(SzSector(magnetization=m, indices=indices, block=block))
    return SzBlocks(n=h.n, sectors=tuple(sectors))


def reassemble(blocks: SzBlocks) -> HamiltonianMatrix:
    """Scatter sector blocks back into the full basis."""
    entries = np.zeros((blocks.dim, blocks.dim), dtype=np.float64)
    for sector in blocks.sectors:
        entries[np.ix_(sector.indices, sector.indices)] = sector.block
    return HamiltonianMatrix(n=blocks.n, entries=entries)


def dump_hamiltonian_csv(h: HamiltonianMatrix, path: Path) -> None:
    """Debug dump: a header line with the dimension, then dense rows."""
    digits = get_settings().CSV_SIGNIFICANT_DIGITS
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow([h.dim])
        for row in h.entries:
            writer.writerow([format(float(x), f".{digits}g") for x in row])
    logger.info("hamiltonian_dumped", path=str(path), dim=h.dim)

"""
Ring Service.

Classifies every ring bond by the impurity membership of its endpoints and
derives its effective couplings:

- pure   (no impurity endpoint)   -> (J, J_z)
- mixed  (one impurity endpoint)  -> (alpha*J, alpha*J_z)
- double (two impurity endpoints) -> (beta*J, beta*J_z)
"""
from __future__ import annotations

from typing import Any

from pydantic import ValidationError as PydanticValidationError

from ..core.exceptions import ValidationError
from ..models.enums import BondKind
from ..schemas.ring import ALLOW_NEGATIVE_SCALES, Bond, BondTable, RingSpec


def load_ring_spec(data: Any, allow_negative_scales: bool | None = None) -> RingSpec:
    """Validate a RingSpec document, naming offending fields on failure."""
    context = None if allow_negative_scales is None else {ALLOW_NEGATIVE_SCALES: allow_negative_scales}
    try:
        return RingSpec.model_validate(data, context=context)
    except PydanticValidationError as e:
        raise ValidationError.from_pydantic(e, "Invalid ring specification")


def classify_bond(a: int, b: int, impurities: frozenset[int]) -> BondKind:
    hits = (a in impurities) + (b in impurities)
    if hits == 2:
        return BondKind.DOUBLE
    if hits == 1:
        return BondKind.MIXED
    return BondKind.PURE


def derive_bonds(spec: RingSpec) -> BondTable:
    """Effective (J, J_z) of bond i joining sites i and i+1 (mod N), i = 1..N."""
    impurities = spec.impurity_set
    scale = {BondKind.PURE: 1.0, BondKind.MIXED: spec.alpha, BondKind.DOUBLE: spec.beta}

    bonds = []
    for index in range(1, spec.n + 1):
        a, b = index, index % spec.n + 1
        kind = classify_bond(a, b, impurities)
        bonds.append(
            Bond(
                index=index,
                sites=(a, b),
                kind=kind,
                j_eff=scale[kind] * spec.j,
                jz_eff=scale[kind] * spec.jz,
            )
        )
    return BondTable(n=spec.n, bonds=tuple(bonds))

"""Ring configuration schemas.

Pydantic models for the ring/impurity configuration and the per-bond
effective couplings derived from it. Sites are labeled 1..N and site N+1 is
site 1; bond i joins sites i and i+1.
"""

from __future__ import annotations

import hashlib
from typing import Any, Self

import orjson
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator

from ..core.config import get_settings
from ..models.enums import BondKind

# Validation context key enabling negative alpha/beta for a single call
ALLOW_NEGATIVE_SCALES = "allow_negative_scales"


class RingSpec(BaseModel):
    """Ring size, base couplings, field, temperature and impurity placement."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(ge=3, description="Number of qubits")
    j: float = Field(description="Base XY coupling J")
    jz: float = Field(description="Base Ising coupling J_z")
    b: float = Field(ge=0.0, description="Homogeneous field along z")
    temperature: float = Field(gt=0.0, description="Temperature, k_B = 1")
    impurities: tuple[int, ...] = Field(default=(), description="Impurity sites, 1-based")
    alpha: float = Field(default=1.0, description="Normal-impurity coupling scale")
    beta: float = Field(default=1.0, description="Impurity-impurity coupling scale")

    @field_validator("n")
    @classmethod
    def validate_site_cap(cls, v: int) -> int:
        """Dense 2^n matrices are capped at MAX_SITES qubits."""
        max_sites = get_settings().MAX_SITES
        if v > max_sites:
            raise ValueError(f"n={v} exceeds MAX_SITES={max_sites}")
        return v

    @field_validator("impurities")
    @classmethod
    def validate_impurities(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        """Reject duplicates and keep a canonical ascending order."""
        if len(set(v)) != len(v):
            duplicates = sorted({site for site in v if v.count(site) > 1})
            raise ValueError(f"duplicate impurity sites {duplicates}")
        return tuple(sorted(v))

    @model_validator(mode="after")
    def validate_ring(self, info: ValidationInfo) -> Self:
        """Cross-field checks: impurity range and coupling-scale sign."""
        out_of_range = [site for site in self.impurities if not 1 <= site <= self.n]
        if out_of_range:
            raise ValueError(f"impurities {out_of_range} outside 1..{self.n}")

        context = info.context or {}
        allow_negative = context.get(ALLOW_NEGATIVE_SCALES, get_settings().ALLOW_NEGATIVE_SCALES)
        if not allow_negative:
            for name in ("alpha", "beta"):
                if getattr(self, name) < 0:
                    raise ValueError(
                        f"{name} must be >= 0 (enable ALLOW_NEGATIVE_SCALES for ferromagnetic impurity bonds)"
                    )
        return self

    @property
    def impurity_set(self) -> frozenset[int]:
        return frozenset(self.impurities)

    def to_document(self) -> dict[str, Any]:
        """JSON document with exactly the RingSpec keys."""
        return self.model_dump(mode="json")

    def spec_hash(self) -> str:
        """Stable hash of the canonical JSON document."""
        payload = orjson.dumps(self.to_document(), option=orjson.OPT_SORT_KEYS)
        return hashlib.sha256(payload).hexdigest()

    def hamiltonian_key(self) -> tuple[Any, ...]:
        """Everything H depends on; temperature excluded."""
        return (self.n, self.j, self.jz, self.b, self.impurities, self.alpha, self.beta)

    def with_overrides(self, **overrides: float) -> RingSpec:
        """Return a validated copy with some fields replaced."""
        data = {**self.model_dump(), **overrides}
        allow_negative = self.alpha < 0 or self.beta < 0 or get_settings().ALLOW_NEGATIVE_SCALES
        return RingSpec.model_validate(data, context={ALLOW_NEGATIVE_SCALES: allow_negative})


class Bond(BaseModel):
    """Effective coupling of the bond joining ``sites[0]`` and ``sites[1]``."""

    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=1, description="Bond index i, joins sites i and i+1")
    sites: tuple[int, int]
    kind: BondKind
    j_eff: float
    jz_eff: float


class BondTable(BaseModel):
    """Exactly N bonds, bond i at position i-1."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=3)
    bonds: tuple[Bond, ...]

    @model_validator(mode="after")
    def validate_size(self) -> Self:
        if len(self.bonds) != self.n:
            raise ValueError(f"expected {self.n} bonds, got {len(self.bonds)}")
        return self

    def __getitem__(self, index: int) -> Bond:
        """Bond by its 1-based index."""
        return self.bonds[index - 1]

    def kinds(self) -> list[BondKind]:
        return [bond.kind for bond in self.bonds]

    def couplings(self) -> list[tuple[float, float]]:
        """(j_eff, jz_eff) per bond, in bond order."""
        return [(bond.j_eff, bond.jz_eff) for bond in self.bonds]

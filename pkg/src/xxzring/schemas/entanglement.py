"""Entanglement schemas: qubit pairs and concurrence results."""

from __future__ import annotations

from typing import Any, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.exceptions import ContractError

# Upper slack on C for roundoff in lambda_1 - lambda_2 - lambda_3 - lambda_4
CONCURRENCE_UPPER_SLACK = 1e-12


class QubitPair(BaseModel):
    """Two distinct 1-based sites, normalized so that ``i < j``."""

    model_config = ConfigDict(frozen=True)

    i: int = Field(ge=1)
    j: int = Field(ge=1)

    @model_validator(mode="before")
    @classmethod
    def normalise(cls, data: Any) -> Any:
        """Accept ``[i, j]``, ``"i,j"``, ``"i-j"`` or a mapping; order the sites."""
        if isinstance(data, str):
            parts = data.replace("-", ",").split(",")
            if len(parts) != 2:
                raise ValueError(f"pair must look like 'i,j', got {data!r}")
            data = [part.strip() for part in parts]
        if isinstance(data, list | tuple):
            if len(data) != 2:
                raise ValueError(f"pair needs exactly two sites, got {len(data)}")
            data = {"i": data[0], "j": data[1]}
        if isinstance(data, dict) and "i" in data and "j" in data:
            i, j = int(data["i"]), int(data["j"])
            if i == j:
                raise ValueError(f"pair sites must differ, got ({i}, {j})")
            data = {"i": min(i, j), "j": max(i, j)}
        return data

    @classmethod
    def of(cls, i: int, j: int) -> QubitPair:
        return cls.model_validate({"i": i, "j": j})

    @property
    def label(self) -> str:
        return f"{self.i}-{self.j}"

    def check_within(self, n: int) -> None:
        """Raise ``ContractError`` unless both sites lie in 1..n."""
        if self.j > n:
            raise ContractError(
                message=f"pair {self.label} outside ring of {n} sites",
                details={"pair": self.label, "n": n},
            )


class ConcurrenceResult(BaseModel):
    """Concurrence of a pair together with the lambdas it was computed from."""

    model_config = ConfigDict(frozen=True)

    pair: QubitPair | None = None
    value: float = Field(ge=0.0, le=1.0 + CONCURRENCE_UPPER_SLACK)
    lambdas: tuple[float, float, float, float]

    @model_validator(mode="after")
    def validate_lambdas(self) -> Self:
        if any(lam < 0 for lam in self.lambdas):
            raise ValueError("lambdas must be non-negative")
        if list(self.lambdas) != sorted(self.lambdas, reverse=True):
            raise ValueError("lambdas must be stored in descending order")
        return self

    @staticmethod
    def from_lambdas(lambdas: tuple[float, float, float, float]) -> float:
        """C = max(0, 2*lambda_max - sum(lambda)) = max(0, l1 - l2 - l3 - l4)."""
        l1, l2, l3, l4 = lambdas
        return max(0.0, l1 - l2 - l3 - l4)

    def with_pair(self, pair: QubitPair) -> ConcurrenceResult:
        return self.model_copy(update={"pair": pair})

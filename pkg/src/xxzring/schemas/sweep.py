"""Sweep schemas.

A SweepPlan varies one or two RingSpec parameters over ascending grids and
lists the qubit pairs to evaluate at every grid point. Axes are given either
as an explicit ``grid`` or as ``start``/``stop``/``step`` (stop inclusive).
"""

from __future__ import annotations

import math
from datetime import datetime
from typing import Any, Self

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, model_validator

from ..models.enums import SweepParameter
from .entanglement import QubitPair
from .ring import ALLOW_NEGATIVE_SCALES, RingSpec

# Grid points generated from start/stop/step are rounded to this many decimals
_GRID_DECIMALS = 12


def expand_range(start: float, stop: float, step: float) -> list[float]:
    """Inclusive arithmetic grid; ``stop`` is kept when it lies on the lattice."""
    if not step > 0:
        raise ValueError(f"step must be positive, got {step}")
    if stop < start:
        raise ValueError(f"stop {stop} is below start {start}")
    count = math.floor((stop - start) / step + 1e-9) + 1
    return [round(start + i * step, _GRID_DECIMALS) for i in range(count)]


class SweepAxis(BaseModel):
    """One swept parameter and its strictly ascending grid."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    param: SweepParameter
    grid: tuple[float, ...] = Field(min_length=1)

    @model_validator(mode="before")
    @classmethod
    def expand(cls, data: Any) -> Any:
        if isinstance(data, dict) and "grid" not in data and {"start", "stop", "step"} <= data.keys():
            data = dict(data)
            data["grid"] = expand_range(
                float(data.pop("start")), float(data.pop("stop")), float(data.pop("step"))
            )
        return data

    @model_validator(mode="after")
    def validate_grid(self) -> Self:
        if any(b <= a for a, b in zip(self.grid, self.grid[1:], strict=False)):
            raise ValueError(f"grid for {self.param.value} must be strictly ascending")
        return self


class SweepPlan(BaseModel):
    """Base spec, one or two axes and the pairs to evaluate."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    base: RingSpec
    axis1: SweepAxis
    axis2: SweepAxis | None = None
    pairs: tuple[QubitPair, ...] = ()

    @model_validator(mode="after")
    def validate_plan(self, info: ValidationInfo) -> Self:
        if self.axis2 is not None and self.axis2.param == self.axis1.param:
            raise ValueError(f"axes must vary distinct parameters, both are {self.axis1.param.value}")
        for pair in self.pairs:
            if pair.j > self.base.n:
                raise ValueError(f"pair {pair.label} outside ring of {self.base.n} sites")

        # Each grid value must give a valid RingSpec on its own
        context = info.context or {}
        allow_negative = context.get(ALLOW_NEGATIVE_SCALES)
        data = self.base.model_dump()
        for axis in self.axes:
            for value in axis.grid:
                RingSpec.model_validate(
                    {**data, axis.param.value: value},
                    context=None if allow_negative is None else {ALLOW_NEGATIVE_SCALES: allow_negative},
                )
        return self

    @property
    def axes(self) -> list[SweepAxis]:
        return [self.axis1] if self.axis2 is None else [self.axis1, self.axis2]

    def resolved_pairs(self) -> list[QubitPair]:
        """Requested pairs, or every nearest-neighbour bond when none were given."""
        if self.pairs:
            return list(self.pairs)
        n = self.base.n
        return [QubitPair.of(i, i % n + 1) for i in range(1, n + 1)]

    def expected_rows(self) -> int:
        second = len(self.axis2.grid) if self.axis2 is not None else 1
        return len(self.axis1.grid) * second * len(self.resolved_pairs())


class SweepRow(BaseModel):
    """Concurrence of one pair at one grid point."""

    model_config = ConfigDict(frozen=True)

    axis1: float
    axis2: float | None = None
    pair: str
    concurrence: float = Field(ge=0.0, le=1.0 + 1e-12)


class SweepMetadata(BaseModel):
    timestamp: datetime
    code_version: str
    spec_hash: str
    plan_hash: str


class SweepResult(BaseModel):
    """Plan echo, rows ordered axis1-major then axis2 then pair, and metadata."""

    plan: SweepPlan
    rows: list[SweepRow]
    metadata: SweepMetadata

    @model_validator(mode="after")
    def validate_row_count(self) -> Self:
        expected = self.plan.expected_rows()
        if len(self.rows) != expected:
            raise ValueError(f"expected {expected} rows, got {len(self.rows)}")
        return self

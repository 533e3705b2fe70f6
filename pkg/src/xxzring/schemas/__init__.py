"""Schemas package - Pydantic models crossing the JSON boundary."""
from .entanglement import ConcurrenceResult, QubitPair
from .ring import Bond, BondTable, RingSpec
from .sweep import SweepAxis, SweepMetadata, SweepPlan, SweepResult, SweepRow

__all__ = [
    # Ring schemas
    "Bond",
    "BondTable",
    "RingSpec",
    # Entanglement schemas
    "ConcurrenceResult",
    "QubitPair",
    # Sweep schemas
    "SweepAxis",
    "SweepMetadata",
    "SweepPlan",
    "SweepResult",
    "SweepRow",
]

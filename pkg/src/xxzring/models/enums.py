"""Shared Enums.

Defines enum types used across schemas and services.
"""
from enum import Enum


class BondKind(str, Enum):
    """Classification of a ring bond by impurity membership of its endpoints.

    Attributes:
        PURE: neither endpoint is an impurity, couplings (J, J_z)
        MIXED: exactly one endpoint is an impurity, couplings (αJ, αJ_z)
        DOUBLE: both endpoints are impurities, couplings (βJ, βJ_z)
    """
    PURE = "pure"
    MIXED = "mixed"
    DOUBLE = "double"


class SweepParameter(str, Enum):
    """RingSpec fields a sweep axis may vary."""
    ALPHA = "alpha"
    BETA = "beta"
    TEMPERATURE = "temperature"
    B = "b"


"""Core package - Configuration, exceptions and the preset catalogue."""
from .config import Settings, get_settings

__all__ = [
    "Settings",
    "get_settings",
]

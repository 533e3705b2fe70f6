"""
Preset Manager.

Loads the named ring configurations from ``config/presets.yaml``. Each preset
is a set of impurity sites layered on shared defaults.
"""
from __future__ import annotations

from pathlib import Path
from typing import Any

import structlog
import yaml
from pydantic import ValidationError as PydanticValidationError

from ..schemas.ring import RingSpec
from .config import get_settings
from .exceptions import ConfigurationError, PresetNotFoundError

logger = structlog.get_logger(__name__)


class PresetManager:
    """
    Manager for loading and resolving ring presets from YAML configuration.

    Usage:
        manager = get_preset_manager()
        spec = manager.get("fig1b").with_overrides(alpha=0.1)
    """

    def __init__(self, config_path: Path | None = None) -> None:
        if config_path is None:
            config_path = Path(get_settings().PRESETS_PATH)

        self.config_path = config_path
        self._defaults: dict[str, Any] = {}
        self._presets: dict[str, dict[str, Any]] = {}
        self._load_presets()

    def _load_presets(self) -> None:
        """Load presets from the YAML configuration file."""
        if not self.config_path.exists():
            raise ConfigurationError(
                f"Preset configuration file not found: {self.config_path}"
            )

        try:
            with open(self.config_path, encoding="utf-8") as f:
                raw = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid YAML in preset configuration: {e}")

        if not isinstance(raw.get("presets"), dict):
            raise ConfigurationError(
                f"Preset configuration {self.config_path} has no 'presets' mapping"
            )

        self._defaults = dict(raw.get("defaults") or {})
        self._presets = raw["presets"]
        logger.debug("presets_loaded", path=str(self.config_path), count=len(self._presets))

    @property
    def names(self) -> list[str]:
        return sorted(self._presets)

    def describe(self, name: str) -> str:
        self._require(name)
        return str(self._presets[name].get("description", ""))

    def get(self, name: str) -> RingSpec:
        """
        Resolve a preset to a validated RingSpec.

        Raises:
            PresetNotFoundError: If ``name`` is not in the catalogue
            ConfigurationError: If the stored preset is not a valid RingSpec
        """
        self._require(name)
        entry = {k: v for k, v in self._presets[name].items() if k != "description"}
        try:
            return RingSpec.model_validate({**self._defaults, **entry})
        except PydanticValidationError as e:
            raise ConfigurationError(
                f"Preset '{name}' is not a valid ring specification",
                details={"errors": [err["msg"] for err in e.errors()]},
            )

    def _require(self, name: str) -> None:
        if name not in self._presets:
            raise PresetNotFoundError(name, self.names)


# -----------------------------------------------------------------------------
# Singleton Pattern with Lazy Initialization
# -----------------------------------------------------------------------------

_preset_manager: PresetManager | None = None


def get_preset_manager() -> PresetManager:
    """Get the global preset manager instance."""
    global _preset_manager
    if _preset_manager is None:
        _preset_manager = PresetManager()
    return _preset_manager


def preset(name: str) -> RingSpec:
    """Named figure configuration (N=10, J=1, J_z=0.65, B=0.4, T=1)."""
    return get_preset_manager().get(name)

"""Tests for the YAML preset catalogue."""

from pathlib import Path

import pytest

from src.xxzring.core.exceptions import ConfigurationError, PresetNotFoundError
from src.xxzring.core.presets import PresetManager, get_preset_manager, preset


def test_catalogue_names():
    assert get_preset_manager().names == ["fig1a", "fig1b", "fig5a", "fig5b"]


@pytest.mark.parametrize(
    ("name", "impurities"),
    [("fig1a", (4, 6)), ("fig1b", (4, 6, 8)), ("fig5a", (5, 6)), ("fig5b", (4, 7, 8))],
)
def test_preset_impurities(name, impurities):
    assert preset(name).impurities == impurities


def test_preset_shared_parameters():
    spec = preset("fig1a")
    assert (spec.n, spec.j, spec.jz, spec.b, spec.temperature) == (10, 1.0, 0.65, 0.4, 1.0)
    assert (spec.alpha, spec.beta) == (1.0, 1.0)


def test_unknown_preset_lists_valid_names():
    with pytest.raises(PresetNotFoundError) as exc:
        preset("fig7")
    assert "fig1a" in exc.value.message
    assert exc.value.details["valid_names"] == ["fig1a", "fig1b", "fig5a", "fig5b"]


def test_missing_file(tmp_path: Path):
    with pytest.raises(ConfigurationError):
        PresetManager(tmp_path / "nope.yaml")


def test_malformed_yaml(tmp_path: Path):
    path = tmp_path / "presets.yaml"
    path.write_text("presets: [unclosed", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        PresetManager(path)


def test_invalid_preset_entry(tmp_path: Path):
    path = tmp_path / "presets.yaml"
    path.write_text(
        "defaults: {n: 4, j: 1.0, jz: 1.0, b: 0.0, temperature: 1.0}\n"
        "presets:\n  broken:\n    impurities: [9]\n",
        encoding="utf-8",
    )
    with pytest.raises(ConfigurationError):
        PresetManager(path).get("broken")


def test_description():
    assert "non-nearest" in get_preset_manager().describe("fig1b")

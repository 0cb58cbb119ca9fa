"""
Tests for parameter validators (CLI boundary).

Each validator raises typer.BadParameter so Typer reports the offending
option with exit code 2.
"""
import pytest
import typer

from src.models.sweep import SweepAxis
from src.utils.validators import (
    validate_config_path,
    validate_positive_frequency,
    validate_preset,
    validate_quad_order,
    validate_sweeps,
)


class TestSweepValidator:
    def test_none_gives_empty_list(self):
        assert validate_sweeps(None) == []

    def test_parses_two_sweeps_in_order(self):
        specs = validate_sweeps(["gamma_small:10:1e8:50:log", "omega:1e4:1e8:20:log"])
        assert [s.axis for s in specs] == [SweepAxis.GAMMA_SMALL, SweepAxis.OMEGA]

    def test_three_sweeps_rejected(self):
        with pytest.raises(typer.BadParameter, match="At most 2"):
            validate_sweeps(["omega:1:2:2", "delta_small:1:2:2", "gamma_small:1:2:2"])

    def test_malformed_sweep_rejected(self):
        with pytest.raises(typer.BadParameter, match="unknown axis"):
            validate_sweeps(["wavelength:1:2:2"])


class TestQuadOrderValidator:
    @pytest.mark.parametrize("order", [16, 32, 64, 128, 256])
    def test_allowed(self, order):
        assert validate_quad_order(order) == order

    @pytest.mark.parametrize("order", [0, 10, 100, 1024])
    def test_rejected(self, order):
        with pytest.raises(typer.BadParameter, match="must be one of"):
            validate_quad_order(order)


class TestPresetValidator:
    def test_known_preset(self):
        assert validate_preset(" fig3b ") == "fig3b"

    def test_none_passes(self):
        assert validate_preset(None) is None

    def test_unknown_preset(self):
        with pytest.raises(typer.BadParameter, match="Unknown preset 'fig9'"):
            validate_preset("fig9")


class TestConfigPathValidator:
    def test_existing_file(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("optical_depth = 10\n", encoding="utf-8")
        assert validate_config_path(str(path)) == str(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(typer.BadParameter, match="not found"):
            validate_config_path(str(tmp_path / "nope.cfg"))

    def test_directory_rejected(self, tmp_path):
        with pytest.raises(typer.BadParameter):
            validate_config_path(str(tmp_path))


class TestFrequencyValidator:
    def test_positive(self):
        assert validate_positive_frequency(1e6) == 1e6

    @pytest.mark.parametrize("value", [0.0, -1e6])
    def test_non_positive(self, value):
        with pytest.raises(typer.BadParameter, match="> 0"):
            validate_positive_frequency(value)

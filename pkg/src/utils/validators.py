"""
Parameter validators for CLI commands.

Each validator function is used as a Typer callback to validate
command arguments at the parameter level, so users see exactly which
option was wrong (exit code 2).

Example:
    @app.command()
    def simulate_command(
        sweep: list[str] = typer.Option(None, "--sweep", callback=validate_sweeps),
    ):
        ...
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from src.models.sweep import ALLOWED_QUAD_ORDERS, MAX_SWEEP_AXES, SweepSpec
from src.utils.presets import PresetCatalog


def validate_sweeps(values: Optional[list[str]]) -> list[SweepSpec]:
    """Parse every --sweep value (axis:start:stop:points:scale, Hz) into a SweepSpec."""
    raw = [v for v in (values or []) if v is not None]
    if len(raw) > MAX_SWEEP_AXES:
        raise typer.BadParameter(f"At most {MAX_SWEEP_AXES} sweeps are allowed, got {len(raw)}")
    specs: list[SweepSpec] = []
    for value in raw:
        try:
            specs.append(SweepSpec.parse(value))
        except ValueError as exc:
            raise typer.BadParameter(str(exc)) from exc
    return specs


def validate_quad_order(value: int) -> int:
    if value not in ALLOWED_QUAD_ORDERS:
        allowed = ", ".join(str(n) for n in ALLOWED_QUAD_ORDERS)
        raise typer.BadParameter(f"Quadrature order must be one of {allowed}")
    return value


def validate_preset(value: Optional[str]) -> Optional[str]:
    """Preset name must exist in the catalog (None passes through)."""
    if value is None:
        return None
    name = value.strip()
    catalog = PresetCatalog()
    if not catalog.has_preset(name):
        raise typer.BadParameter(f"Unknown preset '{name}'. Available: {', '.join(catalog.names())}")
    return name


def validate_config_path(value: Optional[str]) -> Optional[str]:
    """Config file must exist and be a regular file (None passes through)."""
    if value is None:
        return None
    path = Path(value).expanduser()
    if not path.is_file():
        raise typer.BadParameter(f"Config file not found: {value}")
    return str(path)


def validate_positive_frequency(value: float) -> float:
    if not value > 0:
        raise typer.BadParameter("Frequency must be > 0 Hz")
    return value

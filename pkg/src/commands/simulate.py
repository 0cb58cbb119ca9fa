"""
Simulate command - Run a gain / noise-spectrum sweep and write it as CSV.

Commands are Controllers + View in MVCS pattern.
They handle user input, call services, handle exceptions, and display results.
"""

from typing import Optional

import numpy as np
import pandas as pd
import typer
from dependency_injector.wiring import inject, Provide
from rich.console import Console
from rich.table import Table
from src.container import Container
from src.models.sweep import DEFAULT_QUAD_ORDER, SweepSpec
from src.services.sweep_service import SweepService, comparison_path
from src.utils.command_decorators import handle_service_errors
from src.utils.config_file import load_config_file
from src.utils.presets import PresetCatalog, build_manifest
from src.utils.validators import (
    validate_config_path,
    validate_preset,
    validate_quad_order,
    validate_sweeps,
)

app = typer.Typer()
console = Console()


def _summary_table(title: str, table: pd.DataFrame) -> Table:
    view = Table(title=title, show_header=True, header_style="bold cyan")
    view.add_column("Quantity")
    view.add_column("Value", justify="right")

    ok = table[table["error"].fillna("") == ""]
    view.add_row("points", str(len(table)))
    view.add_row("failed points", str(len(table) - len(ok)))
    if len(ok):
        view.add_row("max G_a", f"{np.nanmax(ok['gain_a']):.4g}")
        view.add_row("min G_a", f"{np.nanmin(ok['gain_a']):.4g}")
        view.add_row("max G_b", f"{np.nanmax(ok['gain_b']):.4g}")
        if ok["s_x_minus_db"].notna().any():
            view.add_row("min S_x⁻ (dB)", f"{np.nanmin(ok['s_x_minus_db']):.3f}")
            view.add_row("min S_p⁺ (dB)", f"{np.nanmin(ok['s_p_plus_db']):.3f}")
        if ok["inseparability"].notna().any():
            view.add_row("min 𝓘", f"{np.nanmin(ok['inseparability']):.4f}")
    return view


@inject
@handle_service_errors
def _simulate_impl(
    config_path: Optional[str] = None,
    preset_name: Optional[str] = None,
    sweeps: Optional[list[SweepSpec]] = None,
    no_langevin: bool = False,
    quad_order: int = DEFAULT_QUAD_ORDER,
    out: Optional[str] = None,
    omega_hz: Optional[float] = None,
    pinned: bool = False,
    service: SweepService = Provide[Container.sweep_service],
    catalog: PresetCatalog = Provide[Container.preset_catalog],
    defaults: dict = Provide[Container.config.physics],
):
    preset = catalog.get(preset_name) if preset_name else None
    file_values = load_config_file(config_path) if config_path else None
    output = out or f"{preset_name or 'sweep'}.csv"

    manifest = build_manifest(
        preset=preset,
        defaults=defaults,
        file_values=file_values,
        sweeps=sweeps,
        langevin_enabled=False if no_langevin else None,
        quad_order=quad_order,
        output_path=output,
        omega_hz=omega_hz,
        pinned_ground_state=True if pinned else None,
    )

    if preset is not None and preset.compare_langevin:
        with_langevin, without = service.run_comparison(manifest)
        console.print(_summary_table("With Langevin noise", with_langevin))
        console.print(_summary_table("Without Langevin noise", without))
        console.print(f"[bold green]Wrote[/bold green] {output} and {comparison_path(output)}")
        return

    table = service.run_sweep(manifest)
    console.print(_summary_table(f"Sweep over {manifest.size} point(s)", table))
    console.print(f"[bold green]Wrote[/bold green] {output}")


@app.command(name="simulate")
def simulate_command(
    config_path: Optional[str] = typer.Option(
        None, "--config", help="Physics config file (key = value, frequencies in Hz)", callback=validate_config_path
    ),
    preset: Optional[str] = typer.Option(
        None, "--preset", help="Baked-in parameter set: fig2, fig3a, fig3b, fig4, fig5, fig6", callback=validate_preset
    ),
    sweep: Optional[list[str]] = typer.Option(
        None,
        "--sweep",
        help="axis:start:stop:points:scale with start/stop in Hz; repeat for a 2D grid (outer first)",
        callback=validate_sweeps,
    ),
    no_langevin: bool = typer.Option(False, "--no-langevin", help="Drop the atomic Langevin noise"),
    quad_order: int = typer.Option(
        DEFAULT_QUAD_ORDER, "--quad-order", help="Initial Gauss-Legendre order", callback=validate_quad_order
    ),
    out: Optional[str] = typer.Option(None, "--out", help="CSV output path (default: <preset>.csv)"),
    omega_hz: Optional[float] = typer.Option(None, "--omega-hz", help="Analysis frequency when ω is not swept"),
    pinned: bool = typer.Option(False, "--pinned", help="All atoms in |2⟩ instead of the pumped steady state"),
):
    """
    Run a sweep and write gains, spectra and inseparability as CSV.

    This command acts as both Controller and View:
    - Controller: Handles exceptions and coordinates service calls
    - View: Formats and displays results using Rich
    """
    return _simulate_impl(
        config_path=config_path,
        preset_name=preset,
        sweeps=sweep,
        no_langevin=no_langevin,
        quad_order=quad_order,
        out=out,
        omega_hz=omega_hz,
        pinned=pinned,
    )

"""
Optimize-delta command - Find the two-photon detuning with the lowest inseparability.

Commands are Controllers + View in MVCS pattern.
They handle user input, call services, handle exceptions, and display results.
"""

import math
from typing import Optional

import typer
from dependency_injector.wiring import inject, Provide
from rich.console import Console
from rich.panel import Panel
from src.container import Container
from src.errors import NoMinimum
from src.models.physical_config import TWO_PI
from src.services.optimization_service import OptimizationService
from src.utils.command_decorators import handle_service_errors
from src.utils.config_file import load_config_file, merge_physics
from src.utils.presets import PresetCatalog
from src.utils.validators import validate_config_path, validate_positive_frequency, validate_preset

app = typer.Typer()
console = Console()


@inject
@handle_service_errors
def _optimize_impl(
    omega_hz: float,
    config_path: Optional[str] = None,
    preset_name: Optional[str] = None,
    service: OptimizationService = Provide[Container.optimization_service],
    catalog: PresetCatalog = Provide[Container.preset_catalog],
    defaults: dict = Provide[Container.config.physics],
):
    preset = catalog.get(preset_name) if preset_name else None
    config = merge_physics(
        defaults,
        preset.physics if preset else None,
        load_config_file(config_path) if config_path else None,
    )
    try:
        result = service.optimize_delta(config, TWO_PI * omega_hz)
    except NoMinimum as e:
        console.print(f"[yellow]{e}[/yellow]")
        if not math.isnan(e.best_delta):
            console.print(f"[yellow]Best point: δ/2π = {e.best_delta / TWO_PI / 1e6:.2f} MHz, 𝓘 = {e.best_value:.4f}[/yellow]")
        return

    console.print(
        Panel(
            f"δ/2π = [bold]{result.delta_opt / TWO_PI / 1e6:.2f} MHz[/bold]\n"
            f"𝓘 = [bold]{result.inseparability:.4f}[/bold]\n"
            f"[dim]gain maximum at δ/2π = {result.delta_gain_max / TWO_PI / 1e6:.2f} MHz[/dim]",
            title=f"[bold]Optimal detuning at ω/2π = {omega_hz:g} Hz[/bold]",
            border_style="green",
        )
    )


@app.command(name="optimize-delta")
def optimize_command(
    omega_hz: float = typer.Option(
        ..., "--omega-hz", help="Analysis frequency in Hz", callback=validate_positive_frequency
    ),
    config_path: Optional[str] = typer.Option(
        None, "--config", help="Physics config file (key = value, frequencies in Hz)", callback=validate_config_path
    ),
    preset: Optional[str] = typer.Option(None, "--preset", help="Baked-in parameter set", callback=validate_preset),
):
    """
    Find the two-photon detuning that minimises the inseparability at one ω.
    """
    return _optimize_impl(omega_hz=omega_hz, config_path=config_path, preset_name=preset)

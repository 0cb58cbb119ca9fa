"""
Presets command - List the baked-in parameter sets.

Commands are Controllers + View in MVCS pattern.
They handle user input, call services, handle exceptions, and display results.
"""

import typer
from dependency_injector.wiring import inject, Provide
from rich.console import Console
from rich.table import Table
from src.container import Container
from src.utils.command_decorators import handle_service_errors
from src.utils.presets import Preset, PresetCatalog

app = typer.Typer()
console = Console()


def _physics_text(preset: Preset) -> str:
    return ", ".join(f"{key}={value:g}" for key, value in preset.physics.items())


def _flags_text(preset: Preset) -> str:
    flags = []
    if not preset.langevin_enabled:
        flags.append("no Langevin")
    if preset.compare_langevin:
        flags.append("with/without Langevin")
    if preset.seed_scan:
        flags.append("seed scan")
    if preset.pinned_ground_state:
        flags.append("pinned")
    if preset.omega_hz:
        flags.append(f"ω/2π={preset.omega_hz:g} Hz")
    return ", ".join(flags)


@inject
@handle_service_errors
def _presets_impl(
    catalog: PresetCatalog = Provide[Container.preset_catalog],
):
    presets = catalog.all()
    if not presets:
        console.print("[yellow]No presets found.[/yellow]")
        return

    view = Table(title="Presets", show_header=True, header_style="bold cyan", show_lines=True)
    view.add_column("Name", style="bold green")
    view.add_column("Description")
    view.add_column("Physics (Hz)")
    view.add_column("Sweeps")
    view.add_column("Options")
    for preset in presets:
        view.add_row(
            preset.name,
            preset.description,
            _physics_text(preset),
            "\n".join(preset.sweeps),
            _flags_text(preset),
        )
    console.print(view)


@app.command(name="presets")
def presets_command():
    """
    List the baked-in parameter sets.
    """
    return _presets_impl()

"""
Steady-state command - Show the pumped populations and coherences.

Commands are Controllers + View in MVCS pattern.
They handle user input, call services, handle exceptions, and display results.
"""

from typing import Optional

import typer
from dependency_injector.wiring import inject, Provide
from rich.console import Console
from rich.table import Table
from src.container import Container
from src.models.steady_state import SteadyState
from src.services.spectrum_service import SpectrumService
from src.utils.command_decorators import handle_service_errors
from src.utils.config_file import load_config_file, merge_physics
from src.utils.presets import PresetCatalog
from src.utils.validators import validate_config_path, validate_preset

app = typer.Typer()
console = Console()

_LABELS = ("σ11", "σ22", "σ33", "σ44", "σ31", "σ13", "σ42", "σ24")


def _format(value: complex) -> str:
    if abs(value.imag) < 1e-15:
        return f"{value.real:.6e}"
    return f"{value.real:.6e} {value.imag:+.6e}i"


def _state_table(solved: SteadyState, oracle: Optional[SteadyState]) -> Table:
    view = Table(title="Steady state", show_header=True, header_style="bold cyan")
    view.add_column("Element")
    view.add_column("Linear solve", justify="right")
    if oracle is not None:
        view.add_column("Time evolution", justify="right")
        view.add_column("|Difference|", justify="right")
    for label, a, b in zip(
        _LABELS,
        solved.full_vector(),
        oracle.full_vector() if oracle is not None else [None] * len(_LABELS),
    ):
        if b is None:
            view.add_row(label, _format(complex(a)))
        else:
            view.add_row(label, _format(complex(a)), _format(complex(b)), f"{abs(a - b):.2e}")
    return view


@inject
@handle_service_errors
def _steady_state_impl(
    config_path: Optional[str] = None,
    preset_name: Optional[str] = None,
    pinned: bool = False,
    check: bool = False,
    service: SpectrumService = Provide[Container.spectrum_service],
    catalog: PresetCatalog = Provide[Container.preset_catalog],
    defaults: dict = Provide[Container.config.physics],
):
    preset = catalog.get(preset_name) if preset_name else None
    config = merge_physics(
        defaults,
        preset.physics if preset else None,
        load_config_file(config_path) if config_path else None,
    )
    if pinned:
        service.pinned_ground_state = True
    if check:
        solved, oracle = service.steady_state_check(config)
    else:
        solved, oracle = service.steady_state(config), None
    console.print(_state_table(solved, oracle))
    if not solved.is_physical(tol=1e-8):
        console.print("[yellow]Warning: populations outside [0, 1] or trace ≠ 1[/yellow]")


@app.command(name="steady-state")
def steady_state_command(
    config_path: Optional[str] = typer.Option(
        None, "--config", help="Physics config file (key = value, frequencies in Hz)", callback=validate_config_path
    ),
    preset: Optional[str] = typer.Option(None, "--preset", help="Baked-in parameter set", callback=validate_preset),
    pinned: bool = typer.Option(False, "--pinned", help="All atoms in |2⟩ (no pump)"),
    check: bool = typer.Option(False, "--check", help="Compare with long-time integration of the dynamics"),
):
    """
    Show the eight steady-state populations and pump coherences.
    """
    return _steady_state_impl(config_path=config_path, preset_name=preset, pinned=pinned, check=check)

"""
fwm-noise entry point: Typer app, command discovery and the interactive REPL.

Every module in src/commands/ that exposes a Typer `app` is imported,
wired to the DI container and mounted at the root, so `simulate`,
`steady-state`, `optimize-delta` and `presets` appear as top-level commands.
Launched without arguments, the app drops into a click-repl session.
"""

import importlib
import pkgutil
import sys
from pathlib import Path
from types import ModuleType

# Add project root to Python path to allow 'src' imports
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

import typer
import click
from rich.console import Console
from rich.panel import Panel
from src.container import Container
from src.utils.logging_setup import configure_logging

APP_NAME = "fwm-noise"
APP_HELP = "Gain, quantum-noise spectra and entanglement of four-wave mixing in a cold double-Λ medium."
PROMPT = "fwm > "
COMMANDS_PACKAGE = "src.commands"

app = typer.Typer(name=APP_NAME, help=APP_HELP, add_completion=True)
console = Console()

container = Container()
container.config.run.workers.from_env("SIM_THREADS", default=1, as_=int)

# Registration and wiring happen once per process
_container_wired = False
_commands_registered = False


@app.callback()
def main_callback(
    verbose: int = typer.Option(0, "--verbose", "-v", count=True, help="More log output (-v info, -vv debug)"),
):
    """
    Gain, quantum-noise spectra and entanglement of four-wave mixing in a cold double-Λ medium.
    """
    configure_logging(verbose)


def _command_summaries() -> list[tuple[str, str]]:
    """(name, first help line) of every mounted command except the REPL launcher, by name."""
    root: click.Group = typer.main.get_command(app)
    summaries = []
    for name, command in root.commands.items():
        if name == "interactive":
            continue
        lines = (command.help or "").strip().splitlines()
        summaries.append((name, lines[0] if lines else ""))
    return sorted(summaries)


def _welcome_panel() -> Panel:
    body = ["[bold green]Four-wave mixing noise simulator[/bold green]\n", "Available commands:"]
    for name, summary in _command_summaries():
        body.append(f"  • [cyan]{name}[/cyan] - {summary}" if summary else f"  • [cyan]{name}[/cyan]")
    body.append("\nType [cyan]--help[/cyan] after any command to see details, e.g. [cyan]simulate --help[/cyan].")
    return Panel("\n".join(body), title=f"[bold]{APP_NAME}[/bold]", border_style="green")


def _discover_command_modules() -> list[ModuleType]:
    """Import every public module of src/commands/ that defines a Typer `app`."""
    commands_path = Path(__file__).parent / "commands"
    modules = []
    for info in pkgutil.iter_modules([str(commands_path)]):
        if info.name.startswith("_"):
            continue
        try:
            module = importlib.import_module(f"{COMMANDS_PACKAGE}.{info.name}")
        except Exception as e:
            console.print(f"[yellow]Warning: Failed to import command '{info.name}': {e}[/yellow]")
            continue
        if hasattr(module, "app"):
            modules.append(module)
    return modules


def auto_register_commands():
    """
    Discover, wire and mount all commands from src/commands/.

    Each command module has an outer Typer function with only CLI
    parameters that calls an inner @inject implementation; wiring the
    module lets the inner function resolve its services from the container.
    """
    global _commands_registered, _container_wired

    if _commands_registered:
        return

    modules = _discover_command_modules()

    if not _container_wired and modules:
        try:
            container.wire(modules=[m.__name__ for m in modules])
            _container_wired = True
        except Exception as e:
            console.print(f"[yellow]Warning: Failed to wire container: {e}[/yellow]")

    for module in modules:
        try:
            app.add_typer(module.app, name="")
        except Exception as e:
            console.print(f"[yellow]Warning: Failed to mount command app: {e}[/yellow]")

    _commands_registered = True


def _run_repl() -> None:
    from click_repl import repl

    console.print(_welcome_panel())
    ctx = click.Context(typer.main.get_command(app))
    try:
        repl(ctx, prompt_kwargs={"message": PROMPT})
    except (EOFError, KeyboardInterrupt):
        pass
    console.print("\n[bold green]Good bye![/bold green]")


@app.command()
def interactive():
    """
    Start interactive REPL mode.
    """
    _run_repl()


def run_interactive():
    """Register commands and start the REPL directly."""
    auto_register_commands()
    configure_logging(0)
    _run_repl()


def main():
    """
    Entry point: register commands, then run the REPL when called bare
    and the Typer app otherwise.
    """
    auto_register_commands()

    if len(sys.argv) == 1:
        run_interactive()
    else:
        app()


if __name__ == "__main__":
    main()

"""
Dependency Injection container for the application.

This module defines the DI container that manages all application dependencies,
following the Model-View-Controller-Service (MVCS) pattern.
"""

from dependency_injector import containers, providers

from src.models.physical_config import PhysicalConfig
from src.models.sweep import DEFAULT_QUAD_ORDER
from src.services.optimization_service import OptimizationService
from src.services.spectrum_service import SpectrumService
from src.services.sweep_service import SweepService
from src.utils.presets import PresetCatalog


def default_settings() -> dict:
    """Configuration defaults: the default physics (Hz units) and run options."""
    return {
        "physics": PhysicalConfig().to_frequencies(),
        "run": {
            "quad_order": DEFAULT_QUAD_ORDER,
            "langevin_enabled": True,
            "pinned_ground_state": False,
            "workers": 1,
        },
    }


class Container(containers.DeclarativeContainer):
    """
    Application DI container following MVCS pattern.

    Dependency hierarchy:
    - Model: PhysicalConfig, RunManifest, SpectrumRecord (immutable values)
    - Services: SpectrumService, SweepService, OptimizationService (business logic)
    - Command: CLI commands (Controller + View - handle coordination and presentation)

    Commands ARE controllers in this architecture. They:
    - Receive user input via Typer
    - Call service methods
    - Handle exceptions
    - Format and display results using Rich
    """

    config = providers.Configuration(default=default_settings())

    # Preset catalog (singleton - read once)
    preset_catalog = providers.Singleton(PresetCatalog)

    # Single-point evaluation (factory - caches are per instance)
    spectrum_service = providers.Factory(
        SpectrumService,
        quad_order=config.run.quad_order.as_int(),
        langevin_enabled=config.run.langevin_enabled,
        pinned_ground_state=config.run.pinned_ground_state,
    )

    # Grids, worker pool and CSV output; builds its own SpectrumService per manifest
    sweep_service = providers.Factory(
        SweepService,
        spectrum_factory=spectrum_service.provider,
        workers=config.run.workers.as_int(),
    )

    optimization_service = providers.Factory(
        OptimizationService,
        spectrum_service=spectrum_service,
    )

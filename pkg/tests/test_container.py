"""
Tests for the DI container.

This module tests that the dependency injection container is properly configured.
"""

import pytest
from src.container import Container, default_settings
from src.services.optimization_service import OptimizationService
from src.services.spectrum_service import SpectrumService
from src.services.sweep_service import SweepService
from src.utils.presets import PresetCatalog


@pytest.fixture
def container():
    """Create a container for testing."""
    return Container()


class TestContainerConfiguration:
    """Tests for container configuration."""

    def test_default_run_options(self, container):
        """Test that the run options come from default_settings."""
        assert container.config.run.quad_order() == 64
        assert container.config.run.langevin_enabled() is True
        assert container.config.run.workers() == 1

    def test_default_physics_in_hz(self, container):
        """Test that the physics defaults use the config-file keys."""
        assert container.config.physics() == default_settings()["physics"]
        assert container.config.physics.optical_depth() == 150

    def test_preset_catalog_is_singleton(self, container):
        assert container.preset_catalog() is container.preset_catalog()

    def test_spectrum_service_is_factory(self, container):
        """Test that each spectrum service has its own caches."""
        first = container.spectrum_service()
        second = container.spectrum_service()
        assert first is not second


class TestContainerProvides:
    """Tests for container providing correct instances."""

    def test_provides_preset_catalog(self, container):
        assert isinstance(container.preset_catalog(), PresetCatalog)

    def test_provides_spectrum_service_with_run_options(self, container):
        container.config.run.quad_order.from_value(128)
        container.config.run.langevin_enabled.from_value(False)
        service = container.spectrum_service()
        assert isinstance(service, SpectrumService)
        assert service.quad_order == 128
        assert service.langevin_enabled is False

    def test_provides_sweep_service(self, container):
        container.config.run.workers.from_value(3)
        service = container.sweep_service()
        assert isinstance(service, SweepService)
        assert service.workers == 3
        assert isinstance(service.spectrum_factory(quad_order=32), SpectrumService)

    def test_provides_optimization_service(self, container):
        service = container.optimization_service()
        assert isinstance(service, OptimizationService)
        assert isinstance(service.spectrum_service, SpectrumService)

    def test_override_for_tests(self, container):
        """Test that a provider can be swapped for a stand-in."""
        stand_in = object()
        with container.sweep_service.override(stand_in):
            assert container.sweep_service() is stand_in

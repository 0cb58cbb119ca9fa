"""Models package containing immutable parameter and result types."""

from src.models.physical_config import PhysicalConfig
from src.models.steady_state import SteadyState
from src.models.fluctuation_system import FluctuationSystem
from src.models.transfer_solution import TransferSolution
from src.models.spectrum_record import SpectrumRecord
from src.models.sweep import RunManifest, SweepAxis, SweepScale, SweepSpec

__all__ = [
    "PhysicalConfig",
    "SteadyState",
    "FluctuationSystem",
    "TransferSolution",
    "SpectrumRecord",
    "RunManifest",
    "SweepAxis",
    "SweepScale",
    "SweepSpec",
]

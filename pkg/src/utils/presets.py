"""
Catalog of baked-in run presets.

Presets live in data/presets.json. Each one names a parameter set (Hz
units), the sweeps to run and a few run flags; build_manifest turns a
preset plus any user overrides into a RunManifest.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence

from src.errors import ConfigValidationError
from src.models.physical_config import TWO_PI, optical_depth_from_density
from src.models.sweep import DEFAULT_QUAD_ORDER, RunManifest, SweepSpec
from src.utils.config_file import merge_physics

PRESETS_FILE = Path(__file__).parent.parent / "data" / "presets.json"


@dataclass(frozen=True)
class Preset:
    """
    One named run setup.

    Attributes:
        name: Preset key (e.g. "fig3b")
        description: One-line summary for listings
        physics: Physics overrides in config-file units (Hz)
        sweeps: Sweep strings, axis:start:stop:points:scale in Hz
        omega_hz: Analysis frequency when ω is not swept
        langevin_enabled: Include the atomic Langevin diffusion
        compare_langevin: Also run without Langevin and write a second table
        seed_scan: Exchange seed and conjugate roles below δ = −ω0
        pinned_ground_state: Use σ22 = 1 instead of the pumped steady state
    """

    name: str
    description: str = ""
    physics: Mapping[str, float] = field(default_factory=dict)
    sweeps: tuple[str, ...] = ()
    omega_hz: float = 0.0
    langevin_enabled: bool = True
    compare_langevin: bool = False
    seed_scan: bool = False
    pinned_ground_state: bool = False

    def sweep_specs(self) -> tuple[SweepSpec, ...]:
        return tuple(SweepSpec.parse(s) for s in self.sweeps)


class PresetCatalog:
    """
    Read-only access to the preset file.
    """

    def __init__(self, catalog_path: Path = PRESETS_FILE) -> None:
        """
        Initialize catalog from JSON file.

        Args:
            catalog_path: Path to presets.json
        """
        self.catalog_path = Path(catalog_path)
        self._presets: dict[str, Preset] = {}
        self._load()

    def _load(self) -> None:
        try:
            with open(self.catalog_path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except FileNotFoundError:
            data = {"presets": {}}
        except json.JSONDecodeError as e:
            raise ValueError(f"Invalid JSON in presets file: {e}") from e

        for name, entry in data.get("presets", {}).items():
            self._presets[name] = self._from_entry(name, entry)

    @staticmethod
    def _from_entry(name: str, entry: Mapping[str, Any]) -> Preset:
        physics = dict(entry.get("physics", {}))
        medium = entry.get("medium")
        if medium:
            physics["optical_depth"] = optical_depth_from_density(
                medium["density_cm3"], medium["cross_section_cm2"], physics.get("length_m", 0.01)
            )
        return Preset(
            name=name,
            description=entry.get("description", ""),
            physics=physics,
            sweeps=tuple(entry.get("sweeps", ())),
            omega_hz=float(entry.get("omega_hz", 0.0)),
            langevin_enabled=bool(entry.get("langevin_enabled", True)),
            compare_langevin=bool(entry.get("compare_langevin", False)),
            seed_scan=bool(entry.get("seed_scan", False)),
            pinned_ground_state=bool(entry.get("pinned_ground_state", False)),
        )

    def names(self) -> list[str]:
        return sorted(self._presets)

    def has_preset(self, name: str) -> bool:
        return name in self._presets

    def get(self, name: str) -> Preset:
        """
        Look up a preset.

        Raises:
            ConfigValidationError: Unknown preset name
        """
        try:
            return self._presets[name]
        except KeyError:
            raise ConfigValidationError(
                "preset", f"unknown preset {name!r}; available: {', '.join(self.names())}"
            ) from None

    def all(self) -> list[Preset]:
        return [self._presets[n] for n in self.names()]


def build_manifest(
    preset: Optional[Preset] = None,
    defaults: Optional[Mapping[str, float]] = None,
    file_values: Optional[Mapping[str, float]] = None,
    sweeps: Optional[Sequence[SweepSpec]] = None,
    langevin_enabled: Optional[bool] = None,
    quad_order: int = DEFAULT_QUAD_ORDER,
    output_path: Optional[str] = None,
    omega_hz: Optional[float] = None,
    pinned_ground_state: Optional[bool] = None,
) -> RunManifest:
    """
    Combine defaults, a preset, a config file and command-line choices.

    Precedence, lowest first: defaults, preset, config file, explicit arguments.
    None means "not given".
    """
    config = merge_physics(defaults, preset.physics if preset else None, file_values)

    def pick(explicit: Any, from_preset: Any, fallback: Any) -> Any:
        if explicit is not None:
            return explicit
        return from_preset if preset is not None else fallback

    chosen_sweeps = tuple(sweeps) if sweeps else (preset.sweep_specs() if preset else ())
    return RunManifest(
        config=config,
        sweeps=chosen_sweeps,
        langevin_enabled=pick(langevin_enabled, preset and preset.langevin_enabled, True),
        quad_order=quad_order,
        output_path=output_path,
        omega=TWO_PI * pick(omega_hz, preset and preset.omega_hz, 0.0),
        pinned_ground_state=pick(pinned_ground_state, preset and preset.pinned_ground_state, False),
        seed_scan=bool(preset.seed_scan) if preset else False,
    )

"""
Loader for the `key = value` physics config file.

Example:
    # cold 85Rb, strong pump
    gamma_big_hz = 5.7e6
    omega_rabi_hz = 2e9
    delta_big_hz = 2e9
    delta_small_hz = -217e6

Every *_hz value is an ordinary frequency; PhysicalConfig.from_frequencies
multiplies it by 2π. Keys that are left out keep their previous layer's value.
"""

from __future__ import annotations

import configparser
import math
from pathlib import Path
from typing import Mapping, Optional

from src.errors import ConfigValidationError
from src.models.physical_config import PhysicalConfig

CONFIG_KEYS: tuple[str, ...] = (
    "gamma_big_hz",
    "gamma_small_hz",
    "omega_rabi_hz",
    "delta_big_hz",
    "delta_small_hz",
    "omega_zero_hz",
    "optical_depth",
    "length_m",
)

_SECTION = "physics"


def parse_config_text(text: str, source: str = "<config>") -> dict[str, float]:
    """
    Parse config text into {key: value} (frequencies in Hz).

    Raises:
        ConfigValidationError: Unknown or repeated key, or a non-numeric value
    """
    parser = configparser.ConfigParser(
        delimiters=("=",),
        comment_prefixes=("#",),
        inline_comment_prefixes=("#",),
        strict=True,
        interpolation=None,
    )
    parser.optionxform = str  # keys are case-sensitive
    try:
        parser.read_string(f"[{_SECTION}]\n{text}", source=source)
    except configparser.DuplicateOptionError as exc:
        raise ConfigValidationError(exc.option, f"repeated in {source}") from exc
    except configparser.Error as exc:
        raise ConfigValidationError("config", f"cannot parse {source}: {exc.message}") from exc
    if parser.sections() != [_SECTION]:
        raise ConfigValidationError("config", f"{source} must not contain [sections]")

    values: dict[str, float] = {}
    for key, raw in parser.items(_SECTION):
        if key not in CONFIG_KEYS:
            raise ConfigValidationError(key, f"unknown key in {source}; expected one of {', '.join(CONFIG_KEYS)}")
        try:
            value = float(raw)
        except ValueError as exc:
            raise ConfigValidationError(key, f"not a number: {raw!r}") from exc
        if not math.isfinite(value):
            raise ConfigValidationError(key, f"must be finite, got {raw!r}")
        values[key] = value
    return values


def load_config_file(path: str | Path) -> dict[str, float]:
    """
    Read and parse a config file.

    Raises:
        ConfigValidationError: The file is missing or malformed
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigValidationError("config", f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_config_text(text, source=str(path))


def merge_physics(*layers: Optional[Mapping[str, float]]) -> PhysicalConfig:
    """
    Build a PhysicalConfig from Hz-unit layers; later layers win.

    Starts from the default config, so an empty call gives PhysicalConfig().
    """
    merged = PhysicalConfig().to_frequencies()
    for layer in layers:
        if not layer:
            continue
        for key, value in layer.items():
            if key not in CONFIG_KEYS:
                raise ConfigValidationError(key, "unknown physics parameter")
            merged[key] = float(value)
    return PhysicalConfig.from_frequencies(**merged)

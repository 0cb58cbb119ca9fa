"""
Sweep service for running parameter grids and writing result tables.

Grid points are independent, so they can be spread over worker processes;
results always come back in grid order.
"""

from __future__ import annotations

import logging
import time
from dataclasses import replace
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np
import pandas as pd

from src.models.spectrum_record import CSV_COLUMNS, SpectrumRecord
from src.models.sweep import GridPoint, RunManifest
from src.services.spectrum_service import SpectrumService

logger = logging.getLogger(__name__)

NO_LANGEVIN_SUFFIX = "_no_langevin"
CHUNKS_PER_WORKER = 4


def _evaluate_chunk(
    points: Sequence[GridPoint], options: dict[str, object], seed_scan: bool
) -> list[SpectrumRecord]:
    """Worker entry point: a fresh service evaluates a contiguous slice of the grid."""
    service = SpectrumService(**options)
    return [service.evaluate_point(p.config, p.omega, seed_scan=seed_scan) for p in points]


def records_to_frame(records: Sequence[SpectrumRecord]) -> pd.DataFrame:
    """Tabulate records with the CSV column layout."""
    return pd.DataFrame([r.to_row() for r in records], columns=list(CSV_COLUMNS))


def comparison_path(path: str) -> str:
    """Output path of the no-Langevin run that accompanies `path`."""
    p = Path(path)
    return str(p.with_name(f"{p.stem}{NO_LANGEVIN_SUFFIX}{p.suffix or '.csv'}"))


class SweepService:
    """
    Run RunManifests and persist the results as CSV.
    """

    def __init__(
        self,
        spectrum_factory: Callable[..., SpectrumService] = SpectrumService,
        workers: int = 1,
    ) -> None:
        """
        Initialize the sweep service.

        Args:
            spectrum_factory: Builds a SpectrumService from run options
            workers: Maximum number of worker processes (1 runs in-process)
        """
        self.spectrum_factory = spectrum_factory
        self.workers = max(int(workers), 1)

    def evaluate(self, manifest: RunManifest) -> list[SpectrumRecord]:
        """One SpectrumRecord per grid point, in outer-major order."""
        service = self.spectrum_factory(
            quad_order=manifest.quad_order,
            langevin_enabled=manifest.langevin_enabled,
            pinned_ground_state=manifest.pinned_ground_state,
        )
        points = list(manifest.grid())
        workers = min(self.workers, len(points))
        logger.info("sweeping %d point(s) with %d worker(s)", len(points), workers)
        started = time.perf_counter()

        if workers <= 1:
            records = [
                service.evaluate_point(p.config, p.omega, seed_scan=manifest.seed_scan) for p in points
            ]
        else:
            chunks = [list(c) for c in np.array_split(np.arange(len(points)), workers * CHUNKS_PER_WORKER) if len(c)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [
                    pool.submit(_evaluate_chunk, [points[i] for i in chunk], service.options(), manifest.seed_scan)
                    for chunk in chunks
                ]
                records = [record for future in futures for record in future.result()]

        failed = sum(1 for r in records if not r.ok)
        if failed:
            logger.warning("%d of %d point(s) flagged with an error", failed, len(records))
        logger.info("sweep finished in %.2f s", time.perf_counter() - started)
        return records

    def run_sweep(self, manifest: RunManifest) -> pd.DataFrame:
        """
        Evaluate the manifest and write its CSV when an output path is set.

        Raises:
            OSError: The output file cannot be written
        """
        table = records_to_frame(self.evaluate(manifest))
        if manifest.output_path:
            self.write_csv(table, manifest.output_path)
        return table

    def run_comparison(self, manifest: RunManifest) -> tuple[pd.DataFrame, pd.DataFrame]:
        """
        Run the manifest with and without the Langevin diffusion.

        The second table goes next to the first, with a `_no_langevin` suffix.
        """
        with_langevin = self.run_sweep(replace(manifest, langevin_enabled=True))
        output: Optional[str] = comparison_path(manifest.output_path) if manifest.output_path else None
        without = self.run_sweep(replace(manifest, langevin_enabled=False, output_path=output))
        return with_langevin, without

    @staticmethod
    def write_csv(table: pd.DataFrame, path: str) -> None:
        """Write a table with a fixed float format so identical runs give identical bytes."""
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        table.to_csv(target, index=False, float_format="%.12e", na_rep="nan")
        logger.info("wrote %d row(s) to %s", len(table), target)

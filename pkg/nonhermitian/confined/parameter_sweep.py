# FILE: nonhermitian/confined/parameter_sweep.py

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from pydantic import model_validator

from nonhermitian import config
from nonhermitian.confined.assembly import Coupling, assemble
from nonhermitian.confined.spectrum import ClassifiedSpectrum, spectrum
from nonhermitian.errors import SpectralError
from nonhermitian.schemas import FrozenModel

logger = logging.getLogger(__name__)

SUMMARY_STATES = 10


# ========== Schemas ==========

class SweepRecord(FrozenModel):
    T: float
    mu: float
    N: int
    lowest: list[complex] = []
    labels: list[str] = []
    pair_count: int | None = None
    real_count: int | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


class SweepResult(FrozenModel):
    T_grid: list[float]
    mu_grid: list[float]
    N_grid: list[int]
    coupling: Coupling
    records: list[SweepRecord]

    @model_validator(mode="after")
    def _check_grids(self):
        for name, grid in (("T", self.T_grid), ("mu", self.mu_grid), ("N", self.N_grid)):
            if not grid:
                raise ValueError(f"{name} grid is empty")
            steps = np.diff(np.asarray(grid, dtype=float))
            if grid and not (np.all(steps > 0) or np.all(steps < 0)):
                raise ValueError(f"{name} grid must be strictly monotone")
        expected = len(self.T_grid) * len(self.mu_grid) * len(self.N_grid)
        if len(self.records) != expected:
            raise ValueError(f"expected {expected} records, got {len(self.records)}")
        return self

    def pair_counts(self) -> list[int | None]:
        return [record.pair_count for record in self.records]


# ========== Sweep ==========

def summarize(T: float, mu: float, N: int, classified: ClassifiedSpectrum, states: int = SUMMARY_STATES) -> SweepRecord:
    lowest = classified.entries[:states]
    return SweepRecord(
        T=T,
        mu=mu,
        N=N,
        lowest=[entry.value for entry in lowest],
        labels=[entry.label.value for entry in lowest],
        pair_count=classified.pair_count(states),
        real_count=sum(1 for entry in lowest if entry.label.value == "real"),
    )


def _run_point(point: tuple[float, float, int], coupling: Coupling, tol_im: float | None, states: int) -> SweepRecord:
    T, mu, N = point
    try:
        return summarize(T, mu, N, spectrum(assemble(T, mu, N, coupling), tol_im), states)
    except (SpectralError, ValueError) as e:
        logger.warning(f"[sweep] point T={T} mu={mu} N={N} failed: {str(e)}")
        return SweepRecord(T=T, mu=mu, N=N, error=f"{type(e).__name__}: {e}")


def sweep(
    T_grid,
    mu_grid,
    N_grid,
    coupling: Coupling | str = Coupling.FULL,
    tol_im: float | None = None,
    states: int = SUMMARY_STATES,
    workers: int | None = None,
) -> SweepResult:
    """
    Classified-spectrum summaries over the product grid T x mu x N.

    Points run concurrently; records come back in grid order and a failing
    point is recorded with its error instead of aborting the sweep.
    """
    coupling = Coupling(coupling)
    T_grid, mu_grid, N_grid = list(map(float, T_grid)), list(map(float, mu_grid)), list(map(int, N_grid))
    points = list(itertools.product(T_grid, mu_grid, N_grid))
    workers = config.SWEEP_WORKERS if workers is None else workers

    logger.info(f"[sweep] {len(points)} points, {workers} workers")
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        records = list(pool.map(lambda point: _run_point(point, coupling, tol_im, states), points))

    return SweepResult(T_grid=T_grid, mu_grid=mu_grid, N_grid=N_grid, coupling=coupling, records=records)

"""
Runge-Kutta 4 integrators for the linear Schrodinger form i dy/dt = M y.

rk4_step: one classical RK4 step
integrate_fixed: fixed-step propagation
integrate_adaptive: step-doubling RK4 with Richardson extrapolation
"""

import logging

import numpy as np

from nonhermitian import config
from nonhermitian.errors import NonConvergence

logger = logging.getLogger(__name__)


def rk4_step(generator: np.ndarray, y: np.ndarray, dt: float) -> np.ndarray:
    """Single RK4 step of dy/dt = -i M y."""
    dt2 = dt / 2.0

    k1 = -1j * (generator @ y)
    k2 = -1j * (generator @ (y + k1 * dt2))
    k3 = -1j * (generator @ (y + k2 * dt2))
    k4 = -1j * (generator @ (y + k3 * dt))

    return y + (k1 + 2 * k2 + 2 * k3 + k4) / 6.0 * dt


def integrate_fixed(generator, y0, t: float, steps: int) -> np.ndarray:
    generator = np.asarray(generator, dtype=complex)
    y = np.array(y0, dtype=complex, copy=True)
    dt = t / steps
    for _ in range(steps):
        y = rk4_step(generator, y, dt)
    return y


def integrate_adaptive(
    generator,
    y0,
    t: float,
    rtol: float | None = None,
    max_steps: int = 2_000_000,
) -> np.ndarray:
    """
    Propagate y0 to time t with error-controlled RK4.

    Each step is taken once with dt and twice with dt/2; the difference
    estimates the local error and the extrapolated half-step result is kept.
    """
    rtol = config.RK4_RTOL if rtol is None else rtol
    generator = np.asarray(generator, dtype=complex)
    y = np.array(y0, dtype=complex, copy=True)
    if t == 0.0:
        return y
    if t < 0.0:
        raise ValueError(f"t must be non-negative, got {t}")

    scale = max(float(np.linalg.norm(generator, 2)), 1e-12)
    dt = min(t, 0.5 / scale)
    elapsed, accepted, rejected = 0.0, 0, 0

    while elapsed < t:
        if accepted + rejected > max_steps:
            raise NonConvergence(f"adaptive RK4 exceeded {max_steps} steps at t={elapsed:.6g}")
        dt = min(dt, t - elapsed)

        full = rk4_step(generator, y, dt)
        half = rk4_step(generator, rk4_step(generator, y, dt / 2.0), dt / 2.0)
        error = float(np.linalg.norm(half - full)) / 15.0
        tolerance = rtol * max(float(np.linalg.norm(half)), 1.0)

        if error <= tolerance:
            y = half + (half - full) / 15.0
            elapsed += dt
            accepted += 1
        else:
            rejected += 1

        factor = 4.0 if error == 0.0 else min(4.0, max(0.2, 0.9 * (tolerance / error) ** 0.2))
        dt *= factor

    logger.debug(f"[rk4] t={t:.6g} accepted={accepted} rejected={rejected}")
    return y

# FILE: nonhermitian/confined/propagation.py

import logging

import numpy as np
import pandas as pd

from nonhermitian import config
from nonhermitian.confined.assembly import ConfinedModel
from nonhermitian.confined.basis import basis_eval, check_box
from nonhermitian.confined.spectrum import decompose
from nonhermitian.errors import SingularMatrix
from nonhermitian.integrators import integrate_adaptive
from nonhermitian.linalg import solve_linear
from nonhermitian.schemas import ComplexMatrix, PropagationResult

logger = logging.getLogger(__name__)


def _as_coefficients(model: ConfinedModel, coeffs) -> np.ndarray:
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.shape != (model.dim,):
        raise ValueError(f"coefficient vector must have length {model.dim}, got shape {coeffs.shape}")
    return coeffs


# ========== Time Evolution ==========

def truncate_roundoff(weights: np.ndarray, condition: float) -> np.ndarray:
    """
    Zero expansion weights below dim * cond * eps * ||weights||.

    Such weights are solve noise; left in, a mode with Im lambda > 0 grows them
    by exp(Im lambda t) into a visible drift of stationary states.
    """
    weights = np.array(weights, dtype=complex, copy=True)
    floor = weights.size * condition * np.finfo(float).eps * np.linalg.norm(weights)
    noise = np.abs(weights) <= floor
    if np.any(noise):
        logger.debug(f"[confined] dropped {int(noise.sum())} expansion weights below {floor:.3e}")
        weights[noise] = 0.0
    return weights


def evolve_confined(model: ConfinedModel, coeffs0, t: float) -> PropagationResult:
    """
    Solve i dc/dt = h c from c(0) = coeffs0.

    The initial vector is expanded in the eigenvectors of h and each component
    picks up exp(-i lambda_k t). An eigenvector matrix that is singular or has
    condition above CONDITION_LIMIT sends the propagation to adaptive RK4.
    """
    coeffs0 = _as_coefficients(model, coeffs0)
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    if t == 0:
        return PropagationResult(state=coeffs0, t=0.0, method="eigenbasis")

    decomposition = decompose(model)
    try:
        expansion = solve_linear(ComplexMatrix(entries=decomposition.eigenvectors), coeffs0)
        condition = expansion.condition
    except SingularMatrix:
        expansion, condition = None, float("inf")

    if expansion is None or condition > config.CONDITION_LIMIT:
        logger.warning(f"[confined] eigenvector cond={condition:.3e}, falling back to RK4")
        state = integrate_adaptive(model.matrix.entries, coeffs0, t)
        return PropagationResult(state=state, t=t, method="rk4", condition=condition)

    weights = truncate_roundoff(expansion.solution, condition)
    phases = np.exp(-1j * decomposition.eigenvalues * t)
    state = decomposition.eigenvectors @ (phases * weights)
    logger.debug(f"[confined] evolved to t={t} via eigenbasis, cond={condition:.3e}")
    return PropagationResult(state=state, t=t, method="eigenbasis", condition=condition)


# ========== Wavefunction ==========

def wavefunction_eval(model: ConfinedModel, coeffs, x):
    """Psi(x) = sum_k c_k omega_k(x); scalar in, scalar out."""
    coeffs = _as_coefficients(model, coeffs)
    points = check_box(model.T, x)
    values = sum(c * basis_eval(k, model.T, points) for k, c in enumerate(coeffs, start=1))
    values = np.asarray(values, dtype=complex)
    return complex(values) if values.ndim == 0 else values


def density_series(model: ConfinedModel, coeffs, points: int = 201) -> pd.DataFrame:
    if points < 2:
        raise ValueError(f"need at least 2 grid points, got {points}")
    x = np.linspace(-model.T / 2.0, model.T / 2.0, points)
    psi = wavefunction_eval(model, coeffs, x)
    return pd.DataFrame({"x": x, "re": psi.real, "im": psi.imag, "density": np.abs(psi) ** 2})

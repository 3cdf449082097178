# FILE: nonhermitian/two_level/dynamics.py

import logging

import numpy as np
import scipy.linalg

from nonhermitian import config
from nonhermitian.errors import SingularMatrix
from nonhermitian.linalg import solve_linear
from nonhermitian.schemas import ComplexMatrix, FrozenModel
from nonhermitian.two_level.model import (
    U_MINUS,
    U_PLUS,
    EigenSystem2,
    Regime,
    TwoLevelModel,
    eigenpairs,
    exceptional_basis,
    fixed_basis_system,
)

logger = logging.getLogger(__name__)


def _as_state(psi0) -> np.ndarray:
    psi0 = np.asarray(psi0, dtype=complex)
    if psi0.shape != (2,):
        raise ValueError(f"psi0 must be a complex 2-vector, got shape {psi0.shape}")
    return psi0


def _check_time(t: float) -> None:
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")


# ========== Defective Case ==========

class GeneralizedSolution(FrozenModel):
    """a(t) = (K2 - 2 K1 t) e^{-it}, b(t) = K1 e^{-it} in the basis (u1, u2) at mu = sign."""

    K1: complex
    K2: complex
    sign: int = 1

    @classmethod
    def from_initial(cls, psi0, sign: int = 1) -> "GeneralizedSolution":
        psi0 = _as_state(psi0)
        u1, u2 = exceptional_basis(sign)
        # u1, u2 orthogonal with squared norm 2
        return cls(K2=complex(np.vdot(u1, psi0) / 2.0), K1=complex(np.vdot(u2, psi0) / 2.0), sign=sign)

    def a(self, t: float) -> complex:
        return (self.K2 - 2.0 * self.K1 * t) * np.exp(-1j * t)

    def b(self, t: float) -> complex:
        return self.K1 * np.exp(-1j * t)

    def state(self, t: float) -> np.ndarray:
        u1, u2 = exceptional_basis(self.sign)
        return self.a(t) * u1 + self.b(t) * u2

    @property
    def stationary(self) -> bool:
        return self.K1 == 0


def defective_evolve(psi0, t: float, sign: int = 1) -> np.ndarray:
    _check_time(t)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return GeneralizedSolution.from_initial(psi0, sign).state(t)


# ========== Fixed Basis ==========

def fixed_basis_evolve(mu: float, psi0, t: float) -> np.ndarray:
    """Propagate through the fixed-basis system, valid for every mu including mu^2 = 1."""
    _check_time(t)
    psi0 = _as_state(psi0)
    basis = np.column_stack([U_PLUS, U_MINUS])
    coefficients = basis.conj().T @ psi0 / 2.0
    propagator = scipy.linalg.expm(-1j * t * fixed_basis_system(mu).entries)
    return basis @ (propagator @ coefficients)


# ========== Eigenbasis ==========

def expansion(system: EigenSystem2, psi0) -> tuple[complex, complex, float]:
    """Coefficients (A, B) with psi0 = A u1 + B u2, plus the condition estimate."""
    result = solve_linear(ComplexMatrix(entries=system.matrix), _as_state(psi0))
    return complex(result.solution[0]), complex(result.solution[1]), result.condition


def diagonalized_evolve(system: EigenSystem2, psi_hat0, t: float) -> np.ndarray:
    """Evolution in the eigenbasis coordinates: psi_hat_k(t) = e^{-i lambda_k t} psi_hat_k(0)."""
    _check_time(t)
    phases = np.exp(-1j * np.array([system.lambda1, system.lambda2]) * t)
    return phases * _as_state(psi_hat0)


def evolve(model: TwoLevelModel, psi0, t: float, fallback: bool = True) -> np.ndarray:
    """
    psi(t) = A e^{-i lambda1 t} u1 + B e^{-i lambda2 t} u2.

    At the exceptional point this delegates to defective_evolve. Close to it the
    eigenvector expansion is ill-conditioned; with fallback enabled the fixed-basis
    system takes over, otherwise SingularMatrix propagates.
    """
    _check_time(t)
    psi0 = _as_state(psi0)

    if model.regime is Regime.EXCEPTIONAL:
        return defective_evolve(psi0, t, model.sign)

    system = eigenpairs(model)
    try:
        A, B, condition = expansion(system, psi0)
    except SingularMatrix:
        if not fallback:
            raise
        logger.info(f"[two-level] singular eigenbasis at mu={model.mu}, using fixed basis")
        return fixed_basis_evolve(model.mu, psi0, t)

    if fallback and (model.near_exceptional or condition > config.CONDITION_LIMIT):
        logger.info(f"[two-level] cond={condition:.3e} at mu={model.mu}, using fixed basis")
        return fixed_basis_evolve(model.mu, psi0, t)

    psi_hat = diagonalized_evolve(system, [A, B], t)
    return system.matrix @ psi_hat

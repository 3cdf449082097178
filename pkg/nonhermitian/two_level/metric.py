# FILE: nonhermitian/two_level/metric.py

import logging

import numpy as np
from pydantic import field_validator

from nonhermitian.errors import ExceptionalInput
from nonhermitian.schemas import ComplexMatrix, FrozenModel
from nonhermitian.two_level.model import ExceptionalReport, Regime, TwoLevelModel, eigenpairs

logger = logging.getLogger(__name__)


# ========== Metric Schema ==========

class MetricTransform(FrozenModel):
    """
    eta(t) = diag(r(t), s(t)) with r = exp(kappa (t - tau)), s = 1 / r.

    kappa = sqrt(1 - mu^2) cancels the imaginary parts of the complex pair;
    for a real spectrum kappa = 0 and eta is the identity.
    """

    tau: float
    kappa: float

    @field_validator("tau")
    @classmethod
    def _positive_tau(cls, value: float) -> float:
        if not value > 0:
            raise ValueError(f"tau must be positive, got {value}")
        return value

    @classmethod
    def for_model(cls, model: TwoLevelModel, tau: float) -> "MetricTransform":
        if model.regime is Regime.EXCEPTIONAL:
            raise ExceptionalInput(f"metric transform undefined at the exceptional point mu={model.mu}")
        return cls(tau=tau, kappa=model.kappa)

    def r(self, t: float) -> float:
        return float(np.exp(self.kappa * (t - self.tau)))

    def s(self, t: float) -> float:
        return float(np.exp(-self.kappa * (t - self.tau)))

    def eta(self, t: float) -> np.ndarray:
        return np.diag([self.r(t), self.s(t)]).astype(complex)

    def eta_dot(self, t: float) -> np.ndarray:
        return np.diag([self.kappa * self.r(t), -self.kappa * self.s(t)]).astype(complex)


def _transform(model: TwoLevelModel, tau: float, t: float) -> MetricTransform:
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    return MetricTransform.for_model(model, tau)


# ========== Operations ==========

def metric_factors(model: TwoLevelModel, tau: float, t: float) -> tuple[float, float]:
    transform = _transform(model, tau, t)
    return transform.r(t), transform.s(t)


def transformed_hamiltonian(model: TwoLevelModel, tau: float, t: float) -> ComplexMatrix:
    """h1 = eta^-1 h eta - i eta^-1 d(eta)/dt with h = diag(lambda1, lambda2)."""
    transform = _transform(model, tau, t)
    system = eigenpairs(model)
    assert not isinstance(system, ExceptionalReport)

    h = np.diag([system.lambda1, system.lambda2])
    eta = transform.eta(t)
    eta_inv = np.diag(1.0 / np.diag(eta))
    h1 = eta_inv @ h @ eta - 1j * eta_inv @ transform.eta_dot(t)
    logger.debug(f"[metric] mu={model.mu} t={t} h1 diag={np.diag(h1)}")
    return ComplexMatrix(entries=h1)


def metric_inner_product(phi1, phi2, model: TwoLevelModel, tau: float, t: float) -> complex:
    """(phi1|phi2) = <phi1| eta^dagger eta phi2> = r^2 conj(phi1_1) phi2_1 + s^2 conj(phi1_2) phi2_2."""
    r, s = metric_factors(model, tau, t)
    phi1 = np.asarray(phi1, dtype=complex)
    phi2 = np.asarray(phi2, dtype=complex)
    return complex(r * r * np.conj(phi1[0]) * phi2[0] + s * s * np.conj(phi1[1]) * phi2[1])


def conserved_norm(psi_hat, model: TwoLevelModel, tau: float, t: float) -> float:
    """<phi|phi> for phi = eta(t)^-1 psi_hat; constant along solutions of the diagonal system."""
    r, s = metric_factors(model, tau, t)
    psi_hat = np.asarray(psi_hat, dtype=complex)
    phi = psi_hat / np.array([r, s])
    return float(np.vdot(phi, phi).real)

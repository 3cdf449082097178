# FILE: nonhermitian/two_level/model.py

import cmath
import logging
from enum import Enum

import numpy as np
from pydantic import field_validator, model_validator

from nonhermitian import config
from nonhermitian.schemas import ComplexMatrix, FrozenModel

logger = logging.getLogger(__name__)

# Exceptional-point basis: H(1) eigenvector and its H-dagger partner.
U_PLUS = np.array([1.0, 1.0j])
U_MINUS = np.array([1.0, -1.0j])


# ========== Regime ==========

class Regime(str, Enum):
    REAL = "real"
    COMPLEX = "complex"
    EXCEPTIONAL = "exceptional"


def regime(mu: float) -> Regime:
    gap = mu * mu - 1.0
    if abs(gap) <= config.EXCEPTIONAL_TOL:
        return Regime.EXCEPTIONAL
    return Regime.REAL if gap > 0 else Regime.COMPLEX


def hamiltonian(mu: float) -> ComplexMatrix:
    return ComplexMatrix(entries=[[1.0 - 1.0j, mu], [mu, 1.0 + 1.0j]])


# ========== Model Schema ==========

class TwoLevelModel(FrozenModel):
    """H(mu) = ((1-i, mu), (mu, 1+i)); mu <= 0 is admitted."""

    mu: float

    @field_validator("mu")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not np.isfinite(value):
            raise ValueError("mu must be finite")
        return float(value)

    @property
    def hamiltonian(self) -> ComplexMatrix:
        return hamiltonian(self.mu)

    @property
    def regime(self) -> Regime:
        return regime(self.mu)

    @property
    def sign(self) -> int:
        return 1 if self.mu >= 0 else -1

    @property
    def kappa(self) -> float:
        """Decay rate |Im lambda_1| in the complex regime, else 0."""
        return float(np.sqrt(1.0 - self.mu**2)) if self.regime is Regime.COMPLEX else 0.0

    @property
    def near_exceptional(self) -> bool:
        return abs(self.mu**2 - 1.0) <= config.NEAR_EXCEPTIONAL_TOL


class EigenSystem2(FrozenModel):
    mu: float
    lambda1: complex
    lambda2: complex
    u1: np.ndarray
    u2: np.ndarray

    @model_validator(mode="after")
    def _check(self):
        mu = self.mu
        if abs(self.lambda1 + self.lambda2 - 2.0) > 1e-12 * max(1.0, abs(mu)):
            raise ValueError("trace invariant lambda1 + lambda2 = 2 violated")
        if abs(self.lambda1 * self.lambda2 - (2.0 - mu * mu)) > 1e-12 * max(1.0, mu * mu):
            raise ValueError("determinant invariant lambda1 * lambda2 = 2 - mu^2 violated")
        h = hamiltonian(mu).entries
        for value, vector in ((self.lambda1, self.u1), (self.lambda2, self.u2)):
            if np.linalg.norm(h @ vector - value * vector) > 1e-12 * max(1.0, abs(mu)):
                raise ValueError("eigenpair residual exceeds 1e-12")
        return self

    @property
    def matrix(self) -> np.ndarray:
        """Columns u1, u2 (the U of the diagonalizing similarity)."""
        return np.column_stack([self.u1, self.u2])


class ExceptionalReport(FrozenModel):
    """Single eigenvector at mu = +-1 plus the orthogonal H-dagger eigenvector."""

    mu: float
    sign: int
    eigenvalue: complex
    eigenvector: np.ndarray
    auxiliary: np.ndarray


# ========== Eigenpairs ==========

def _eigenvector(mu: float, value: complex) -> np.ndarray:
    # Rows of (H - lambda) give (mu, lambda-1+i) and (lambda-1-i, mu); keep the larger.
    first = np.array([mu, value - 1.0 + 1.0j])
    second = np.array([value - 1.0 - 1.0j, mu])
    vector = first if np.linalg.norm(first) >= np.linalg.norm(second) else second
    return vector / np.linalg.norm(vector)


def exceptional_basis(sign: int) -> tuple[np.ndarray, np.ndarray]:
    """(u1, u2) at mu = sign: u1 = (1, sign*i), u2 = (1, -sign*i)."""
    return (U_PLUS, U_MINUS) if sign > 0 else (U_MINUS, U_PLUS)


def eigenpairs(model: TwoLevelModel) -> EigenSystem2 | ExceptionalReport:
    mu = model.mu
    if model.regime is Regime.EXCEPTIONAL:
        u1, u2 = exceptional_basis(model.sign)
        logger.debug(f"[two-level] exceptional point mu={mu}")
        return ExceptionalReport(
            mu=mu,
            sign=model.sign,
            eigenvalue=1.0 + 0.0j,
            eigenvector=u1 / np.sqrt(2.0),
            auxiliary=u2 / np.sqrt(2.0),
        )

    root = cmath.sqrt(mu * mu - 1.0)  # principal branch, Im >= 0
    lambda1, lambda2 = 1.0 + root, 1.0 - root
    return EigenSystem2(
        mu=mu,
        lambda1=lambda1,
        lambda2=lambda2,
        u1=_eigenvector(mu, lambda1),
        u2=_eigenvector(mu, lambda2),
    )


# ========== Fixed Basis ==========

def fixed_basis_system(mu: float) -> ComplexMatrix:
    """
    Coefficient matrix M(mu) of i d/dt (a, b) = M (a, b) for psi = a(1,i) + b(1,-i).

    Since u_j^dagger u_k = 2 delta_jk, M_jk = u_j^dagger H u_k / 2, which is
    smooth through mu = 1 where it reduces to ((1, -2i), (0, 1)).
    """
    basis = np.column_stack([U_PLUS, U_MINUS])
    return ComplexMatrix(entries=basis.conj().T @ hamiltonian(mu).entries @ basis / 2.0)


def exceptional_identities(sign: int = 1) -> dict[str, complex]:
    h = hamiltonian(float(sign)).entries
    u1, u2 = exceptional_basis(sign)
    return {
        "u1_H_u1": complex(u1.conj() @ h @ u1),
        "u2_H_u1": complex(u2.conj() @ h @ u1),
        "u1_H_u2": complex(u1.conj() @ h @ u2),
        "u2_H_u2": complex(u2.conj() @ h @ u2),
    }


def biorthogonality_defect(mu: float) -> float:
    """
    Normalized |w^dagger u1| for u1 the H-eigenvector of lambda1 and w the
    H-dagger eigenvector of conj(lambda1); vanishes in the limit mu -> 1.
    """
    system = eigenpairs(TwoLevelModel(mu=mu))
    if isinstance(system, ExceptionalReport):
        return float(abs(np.vdot(system.auxiliary, system.eigenvector)))
    value = system.lambda1
    # H-dagger row: (1+i-conj(lambda)) w1 + mu w2 = 0
    w = np.array([mu, np.conj(value) - 1.0 - 1.0j])
    w /= np.linalg.norm(w)
    return float(abs(np.vdot(w, system.u1)))

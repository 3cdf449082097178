# FILE: nonhermitian/schemas.py

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from nonhermitian import config
from nonhermitian.errors import ContractViolation


# ========== BASE SCHEMA ==========

class FrozenModel(BaseModel):
    """Immutable value object that may carry numpy arrays."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


def _readonly(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=complex, copy=True)
    array.setflags(write=False)
    return array


# ========== MATRIX SCHEMA ==========

class ComplexMatrix(FrozenModel):
    entries: np.ndarray

    @field_validator("entries", mode="before")
    @classmethod
    def _coerce(cls, value):
        array = np.asarray(value)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError(f"matrix must be square, got shape {array.shape}")
        if array.shape[0] < 1:
            raise ValueError("matrix dimension must be at least 1")
        if not np.all(np.isfinite(array)):
            raise ValueError("matrix entries must be finite")
        return _readonly(array)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.entries, "fro"))

    def transpose(self) -> "ComplexMatrix":
        return ComplexMatrix(entries=self.entries.T)

    def is_complex_symmetric(self, rtol: float = 1e-14) -> bool:
        return bool(np.allclose(self.entries, self.entries.T, rtol=0.0, atol=rtol * max(self.frobenius_norm, 1.0)))


# ========== EIGENDECOMPOSITION SCHEMA ==========

class SpectralDecomposition(FrozenModel):
    """Eigenvalues, unit right eigenvectors (columns) and residual norms."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residuals: np.ndarray
    matrix_norm: float

    @field_validator("eigenvalues", "eigenvectors", mode="before")
    @classmethod
    def _coerce_complex(cls, value):
        return _readonly(value)

    @field_validator("residuals", mode="before")
    @classmethod
    def _coerce_real(cls, value):
        array = np.array(value, dtype=float, copy=True)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _check_contract(self):
        dim = self.eigenvalues.shape[0]
        if self.eigenvectors.shape != (dim, dim) or self.residuals.shape != (dim,):
            raise ContractViolation("eigenvalues, eigenvectors and residuals disagree in size")
        bound = config.RESIDUAL_RTOL * self.matrix_norm
        worst = float(self.residuals.max()) if dim else 0.0
        if worst > bound:
            raise ContractViolation(f"eigenpair residual {worst:.3e} exceeds {bound:.3e}")
        norms = np.linalg.norm(self.eigenvectors, axis=0)
        if np.any(np.abs(norms - 1.0) > config.UNIT_NORM_TOL):
            raise ContractViolation("eigenvectors are not unit norm")
        return self

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]


# ========== LINEAR SOLVE SCHEMA ==========

class LinearSolution(FrozenModel):
    solution: np.ndarray
    condition: float
    residual: float

    @field_validator("solution", mode="before")
    @classmethod
    def _coerce(cls, value):
        return _readonly(value)


# ========== PROPAGATION SCHEMA ==========

class PropagationResult(FrozenModel):
    """State at time t plus the route that produced it."""

    state: np.ndarray
    t: float
    method: Literal["eigenbasis", "rk4", "fixed-basis", "defective"]
    condition: float | None = None

    @field_validator("state", mode="before")
    @classmethod
    def _coerce(cls, value):
        return _readonly(value)

    @property
    def fell_back(self) -> bool:
        return self.method == "rk4"

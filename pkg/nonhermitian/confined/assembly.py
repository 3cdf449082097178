# FILE: nonhermitian/confined/assembly.py

import logging
import math
from enum import Enum

import numpy as np
from pydantic import model_validator

from nonhermitian.confined.basis import coupling_integral
from nonhermitian.errors import ContractViolation
from nonhermitian.schemas import ComplexMatrix, FrozenModel

logger = logging.getLogger(__name__)

# Overlap <omega|omega> = 1/2 under (1/T) int; orthonormalizing doubles raw integrals.
OVERLAP_NORMALIZATION = 2.0


class Coupling(str, Enum):
    FULL = "full"
    NEAREST = "nearest"


class ConfinedModel(FrozenModel):
    """Galerkin matrix h = D + i mu C of -D^2 + i mu x on (-T/2, T/2), dimension 2N."""

    T: float
    mu: float
    N: int
    coupling: Coupling
    matrix: ComplexMatrix

    @model_validator(mode="after")
    def _check_structure(self):
        h = self.matrix.entries
        if h.shape != (2 * self.N, 2 * self.N):
            raise ContractViolation(f"matrix shape {h.shape} does not match N={self.N}")
        if not self.matrix.is_complex_symmetric():
            raise ContractViolation("confined matrix must equal its transpose")
        return self

    @property
    def dim(self) -> int:
        return 2 * self.N

    @property
    def diagonal(self) -> np.ndarray:
        return np.diag(self.matrix.entries).real.copy()

    @property
    def coupling_matrix(self) -> np.ndarray:
        """Real symmetric C with h = D + i mu C (zero when mu = 0)."""
        off = self.matrix.entries - np.diag(np.diag(self.matrix.entries))
        return off.imag / self.mu if self.mu != 0 else np.zeros_like(off.real)

    @property
    def parity_phases(self) -> np.ndarray:
        """diag(1, i, 1, i, ...): similarity taking h to a real matrix."""
        k = np.arange(1, self.dim + 1)
        return np.where(k % 2 == 1, 1.0 + 0.0j, 1.0j)

    def real_form(self) -> np.ndarray:
        """S^-1 h S with S = diag(parity_phases); real because C couples opposite parities only."""
        phases = self.parity_phases
        rotated = (self.matrix.entries * phases[None, :]) / phases[:, None]
        return rotated.real

    def offdiagonal_row_sums(self) -> np.ndarray:
        h = np.abs(self.matrix.entries)
        return h.sum(axis=1) - np.diag(h)


def assemble(T: float, mu: float, N: int, coupling: Coupling | str = Coupling.FULL) -> ConfinedModel:
    if not T > 0:
        raise ValueError(f"T must be positive, got {T}")
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    coupling = Coupling(coupling)

    dim = 2 * N
    k = np.arange(1, dim + 1)
    h = np.diag((k * math.pi / T) ** 2).astype(complex)

    for j in range(1, dim + 1, 2):
        for kk in range(2, dim + 1, 2):
            if coupling is Coupling.NEAREST and abs(kk - j) != 1:
                continue
            value = 1j * mu * OVERLAP_NORMALIZATION * coupling_integral(j, kk, T)
            h[j - 1, kk - 1] = value
            h[kk - 1, j - 1] = value

    logger.debug(f"[assemble] T={T} mu={mu} N={N} coupling={coupling.value}")
    return ConfinedModel(T=T, mu=mu, N=N, coupling=coupling, matrix=ComplexMatrix(entries=h))

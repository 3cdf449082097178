# FILE: nonhermitian/confined/spectrum.py

import logging
import warnings
from enum import Enum

import numpy as np

from nonhermitian import config
from nonhermitian.confined.assembly import ConfinedModel
from nonhermitian.errors import ClassificationWarning
from nonhermitian.linalg import build_decomposition, eig
from nonhermitian.schemas import ComplexMatrix, FrozenModel, SpectralDecomposition

logger = logging.getLogger(__name__)


# ========== Schemas ==========

class Label(str, Enum):
    REAL = "real"
    PAIR = "pair"


class SpectrumEntry(FrozenModel):
    index: int
    value: complex
    label: Label
    partner: int | None = None
    diagonal_deviation: complex


class ClassifiedSpectrum(FrozenModel):
    entries: list[SpectrumEntry]
    tol_im: float
    matrix_norm: float

    @property
    def values(self) -> np.ndarray:
        return np.array([entry.value for entry in self.entries], dtype=complex)

    def real_parts(self, limit: int | None = None) -> list[float]:
        return [entry.value.real for entry in self.entries[:limit]]

    def pair_count(self, limit: int | None = None) -> int:
        return pair_count(self, limit)

    @property
    def real_count(self) -> int:
        return sum(1 for entry in self.entries if entry.label is Label.REAL)


# ========== Decomposition ==========

def decompose(model: ConfinedModel) -> SpectralDecomposition:
    """Eigenpairs of h computed on its real similar form, mapped back by the parity phases."""
    rotated = eig(ComplexMatrix(entries=model.real_form()))
    vectors = model.parity_phases[:, None] * rotated.eigenvectors
    return build_decomposition(model.matrix, rotated.eigenvalues, vectors)


# ========== Classification ==========

def classify(values: np.ndarray, diagonal: np.ndarray, matrix_norm: float, tol_im: float | None = None) -> ClassifiedSpectrum:
    """
    Label each eigenvalue real or conjugate-pair member.

    Pairs are matched greedily to the nearest conjugate within
    PAIR_WINDOW_FACTOR * ||h||_F; unmatched complex values are kept as pair
    members without partner and reported with a ClassificationWarning.
    """
    values = np.asarray(values, dtype=complex)
    tol_im = config.TOL_IM_FACTOR * matrix_norm if tol_im is None else tol_im
    window = config.PAIR_WINDOW_FACTOR * matrix_norm
    diagonal = np.sort(np.asarray(diagonal, dtype=float))

    partners: dict[int, int | None] = {}
    complex_indices = [i for i, value in enumerate(values) if abs(value.imag) > tol_im]
    for i in complex_indices:
        if i in partners:
            continue
        candidates = [j for j in complex_indices if j != i and j not in partners]
        if candidates:
            distances = [abs(values[j] - np.conj(values[i])) for j in candidates]
            best = int(np.argmin(distances))
            if distances[best] <= window:
                partners[i], partners[candidates[best]] = candidates[best], i
                continue
        partners[i] = None
        warnings.warn(f"eigenvalue {values[i]:.9g} has no conjugate partner", ClassificationWarning, stacklevel=2)
        logger.warning(f"[classify] unpaired complex eigenvalue {values[i]:.9g}")

    entries = [
        SpectrumEntry(
            index=i,
            value=complex(value),
            label=Label.PAIR if i in partners else Label.REAL,
            partner=partners.get(i),
            diagonal_deviation=complex(value - diagonal[i]),
        )
        for i, value in enumerate(values)
    ]
    return ClassifiedSpectrum(entries=entries, tol_im=tol_im, matrix_norm=matrix_norm)


def spectrum(model: ConfinedModel, tol_im: float | None = None) -> ClassifiedSpectrum:
    decomposition = decompose(model)
    classified = classify(decomposition.eigenvalues, model.diagonal, decomposition.matrix_norm, tol_im)
    logger.info(
        f"[spectrum] T={model.T} mu={model.mu} N={model.N}: "
        f"{classified.pair_count()} pairs, {classified.real_count} real"
    )
    return classified


def pair_count(classified: ClassifiedSpectrum, limit: int | None = None) -> int:
    """Conjugate pairs with both members among the lowest `limit` states."""
    limit = len(classified.entries) if limit is None else limit
    return sum(
        1
        for entry in classified.entries[:limit]
        if entry.label is Label.PAIR and entry.partner is not None and entry.index < entry.partner < limit
    )

# FILE: nonhermitian/confined/basis.py

import math
from enum import Enum

import numpy as np
from pydantic import field_validator

from nonhermitian.errors import DomainError, ParityError
from nonhermitian.schemas import FrozenModel


class Parity(str, Enum):
    EVEN = "even"  # cos((2n-1) pi x / T), odd k
    ODD = "odd"  # sin(2n pi x / T), even k


class BasisIndex(FrozenModel):
    """Combined index k: odd k carries cos(k pi x/T), even k carries sin(k pi x/T)."""

    k: int

    @field_validator("k")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"basis index must be positive, got {value}")
        return value

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if self.k % 2 == 1 else Parity.ODD

    def frequency(self, T: float) -> float:
        return self.k * math.pi / T


def check_box(T: float, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > T / 2.0 * (1.0 + 1e-12)):
        raise DomainError(f"x must lie in [-T/2, T/2] = [{-T / 2}, {T / 2}]")
    return x


def basis_eval(index: BasisIndex | int, T: float, x):
    """Value of omega_k at x (scalar or array); zero at x = +-T/2."""
    if not isinstance(index, BasisIndex):
        index = BasisIndex(k=index)
    x = check_box(T, x)
    argument = index.frequency(T) * x
    values = np.cos(argument) if index.parity is Parity.EVEN else np.sin(argument)
    return float(values) if values.ndim == 0 else values


def _sigma(m: int) -> int:
    """sin(m pi / 2) for odd m."""
    return 1 if m % 4 == 1 else -1


def coupling_integral(j: int, k: int, T: float) -> float:
    """
    c = (1/T) int_{-T/2}^{T/2} x omega_j omega_k dx for a cos/sin pair.

    With cos(a) sin(b) = (sin(b+a) + sin(b-a)) / 2 and
    int x sin(m pi x / T) dx over the box = 2 T^2 sin(m pi/2) / (m pi)^2 for odd m:
        c = (T / pi^2) [sigma(k+j) / (k+j)^2 + sigma(k-j) / (k-j)^2]
    where j is the cosine (odd) index and k the sine (even) index.
    """
    if j % 2 == k % 2:
        raise ParityError(f"indices {j} and {k} have equal parity; the integral vanishes by symmetry")
    odd, even = (j, k) if j % 2 == 1 else (k, j)
    m_plus, m_minus = even + odd, even - odd
    return T / math.pi**2 * (_sigma(m_plus) / m_plus**2 + _sigma(m_minus) / m_minus**2)

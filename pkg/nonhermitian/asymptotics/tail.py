# FILE: nonhermitian/asymptotics/tail.py
"""
Large-|x| behaviour of eigenfunctions of -D^2 + i x^m on the whole line.

For odd m the ansatz psi = exp(-b x^p) x^q F(x) with F = sum A_n x^(-n p)
removes the potential term when 2p - 2 = m and b^2 p^2 = i, and removes the
next order when q = -m/4. The x < 0 tail follows from i -> -i.
"""

import cmath
import logging
import math
from enum import Enum
from functools import lru_cache

import sympy as sp
from pydantic import model_validator

from nonhermitian.errors import DomainError
from nonhermitian.schemas import FrozenModel

logger = logging.getLogger(__name__)

_x = sp.Symbol("x", positive=True)
_EVAL_DIGITS = 30


class Side(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


# ========== Parameters ==========

class TailExpansion(FrozenModel):
    m: int
    p: float
    b: complex
    q: float

    @model_validator(mode="after")
    def _check(self):
        _check_m(self.m)
        if 2 * self.p - 2 != self.m:
            raise ValueError(f"2p - 2 must equal m, got p={self.p} for m={self.m}")
        if abs(self.b**2 * self.p**2 - 1j) > 1e-14:
            raise ValueError(f"b^2 p^2 must equal i, got {self.b**2 * self.p**2}")
        if not self.b.real > 0:
            raise ValueError("Re(b) must be positive for a decaying tail")
        return self

    def series_coefficients(self, order: int) -> list[complex]:
        return series_coefficients(self, order)


def _check_m(m: int) -> None:
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be a positive odd integer, got {m}")


@lru_cache(maxsize=None)
def _exact_parameters(m: int) -> tuple[sp.Expr, sp.Expr, sp.Expr]:
    p = sp.Rational(m + 2, 2)
    b = sp.sqrt(2) / (m + 2) * (1 + sp.I)
    q = sp.Rational(-m, 4)
    return p, b, q


def tail_parameters(m: int) -> TailExpansion:
    _check_m(m)
    p, b, q = _exact_parameters(m)
    return TailExpansion(m=m, p=float(p), b=complex(b), q=float(q))


def leading_term_coefficient(m: int, q=None) -> sp.Expr:
    """(m^2 + 2m)/4 b + (m + 2) b q: coefficient of x^(p-2) in H psi / psi."""
    _, b, exact_q = _exact_parameters(m)
    q = exact_q if q is None else q
    return sp.expand(sp.Rational(m * m + 2 * m, 4) * b + (m + 2) * b * q)


def solve_tail_power(m: int) -> float:
    _check_m(m)
    q = sp.Symbol("q")
    roots = sp.solve(sp.Eq(leading_term_coefficient(m, q), 0), q)
    logger.debug(f"[tail] m={m}: q roots {roots}")
    return float(roots[0])


def consistency_flag(m: int) -> bool:
    """False for m = 1, where the ansatz contradicts a finite D^2 psi at the origin."""
    _check_m(m)
    return m >= 2


# ========== Series ==========

@lru_cache(maxsize=None)
def _exact_series(m: int, order: int) -> tuple[sp.Expr, ...]:
    """
    A_0 = 1 and, matching powers x^(-s_{n-1} - 2) with s_n = n p,
        2 b p s_n A_n = -(s_{n-1} - q)(s_{n-1} - q + 1) A_{n-1}
    """
    p, b, q = _exact_parameters(m)
    coefficients = [sp.Integer(1)]
    for n in range(1, order + 1):
        s_prev, s_n = (n - 1) * p, n * p
        coefficients.append(sp.simplify(-(s_prev - q) * (s_prev - q + 1) * coefficients[-1] / (2 * b * p * s_n)))
    return tuple(coefficients)


def series_coefficients(exp: TailExpansion, order: int) -> list[complex]:
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    return [complex(value) for value in _exact_series(exp.m, order)]


def series_exponents(exp: TailExpansion, order: int) -> list[float]:
    """s_n with F = sum A_n x^(-s_n)."""
    return [n * exp.p for n in range(order + 1)]


# ========== Evaluation ==========

def asymptotic_psi(exp: TailExpansion, x: float, side: Side | str = Side.POSITIVE) -> complex:
    """exp(-b |x|^p) |x|^q for x > 0; b -> conj(b) for x < 0."""
    side = Side(side)
    if x == 0:
        raise DomainError("the asymptotic form is singular at x = 0")
    if (x > 0) != (side is Side.POSITIVE):
        raise DomainError(f"x={x} lies on the other side of the origin from {side.value}")
    b = exp.b if side is Side.POSITIVE else exp.b.conjugate()
    r = abs(x)
    return cmath.exp(-b * r**exp.p) * r**exp.q


def _log_ansatz(m: int, order: int, b) -> sp.Expr:
    p, exact_b, q = _exact_parameters(m)
    b = exact_b if b is None else sp.sympify(complex(b))
    series = sum(a * _x ** (-n * p) for n, a in enumerate(_exact_series(m, order)))
    return -b * _x**p + q * sp.log(_x) + sp.log(series)


def _hamiltonian_ratio(m: int, order: int, b=None) -> sp.Expr:
    """(-D^2 + i x^m) psi / psi = -(S'' + S'^2) + i x^m with psi = exp(S), E = 0."""
    S = _log_ansatz(m, order, b)
    dS = sp.diff(S, _x)
    return -(sp.diff(dS, _x) + dS**2) + sp.I * _x**m


def potential_coefficient(exp: TailExpansion) -> sp.Expr:
    """Coefficient of x^m in the leading-order ratio; zero for the exact parameters."""
    return sp.expand(_hamiltonian_ratio(exp.m, 0)).coeff(_x, exp.m)


def residual_check(exp: TailExpansion, x: float, order: int = 0, b: complex | None = None) -> float:
    """
    |(-D^2 + i x^m) psi| / |psi| / x^(m-1) for the truncated ansatz at E = 0.

    Decays with x for the correct parameters; passing a different b gives the
    same evaluation for a perturbed tail.
    """
    if x <= 0:
        raise DomainError(f"residual is evaluated on the positive tail, got x={x}")
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    ratio = _hamiltonian_ratio(exp.m, order, b)
    value = complex(ratio.evalf(_EVAL_DIGITS, subs={_x: sp.Float(x, _EVAL_DIGITS)}))
    residual = abs(value) / x ** (exp.m - 1)
    logger.debug(f"[tail] m={exp.m} order={order} x={x}: residual {residual:.3e}")
    return residual


def tail_modulus(exp: TailExpansion, x: float) -> float:
    """exp(-Re(b) |x|^p) |x|^q."""
    r = abs(x)
    return math.exp(-exp.b.real * r**exp.p) * r**exp.q

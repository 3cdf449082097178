import math

import pytest
from pydantic import ValidationError

from nonhermitian.asymptotics import (
    Side,
    TailExpansion,
    asymptotic_psi,
    consistency_flag,
    leading_term_coefficient,
    potential_coefficient,
    residual_check,
    series_coefficients,
    series_exponents,
    solve_tail_power,
    tail_modulus,
    tail_parameters,
)
from nonhermitian.errors import DomainError


@pytest.fixture(scope="module")
def cubic():
    return tail_parameters(3)


# ========== Parameters ==========

def test_cubic_parameters(cubic):
    assert cubic.p == 2.5
    assert cubic.q == -0.75
    assert cubic.b == pytest.approx(math.sqrt(2) / 5 * (1 + 1j), abs=1e-15)


@pytest.mark.parametrize("m", [1, 3, 5, 7, 9])
def test_parameters_cancel_the_potential(m):
    exp = tail_parameters(m)
    assert 2 * exp.p - 2 == m
    assert abs(exp.b**2 * exp.p**2 - 1j) < 1e-14
    assert exp.b.real > 0
    assert leading_term_coefficient(m) == 0
    assert solve_tail_power(m) == pytest.approx(-m / 4)
    assert potential_coefficient(exp) == 0


def test_consistency_flag():
    assert consistency_flag(1) is False
    assert all(consistency_flag(m) for m in (3, 5, 7, 9))
    with pytest.raises(ValueError):
        consistency_flag(2)
    with pytest.raises(ValueError):
        tail_parameters(0)


def test_invalid_expansion_rejected(cubic):
    with pytest.raises(ValidationError):
        TailExpansion(m=3, p=2.0, b=cubic.b, q=-0.75)
    with pytest.raises(ValidationError):
        TailExpansion(m=3, p=2.5, b=cubic.b.conjugate(), q=-0.75)
    with pytest.raises(ValidationError):
        TailExpansion(m=3, p=2.5, b=-cubic.b, q=-0.75)


# ========== Series ==========

def test_series_coefficients(cubic):
    coefficients = series_coefficients(cubic, 2)
    assert coefficients[0] == 1
    b, p, q = cubic.b, cubic.p, cubic.q
    a1 = -(-q) * (1 - q) / (2 * b * p * p)
    assert coefficients[1] == pytest.approx(a1, rel=1e-12)
    a2 = -(p - q) * (p - q + 1) * a1 / (2 * b * p * 2 * p)
    assert coefficients[2] == pytest.approx(a2, rel=1e-12)
    assert cubic.series_coefficients(2) == coefficients
    assert series_exponents(cubic, 2) == [0.0, 2.5, 5.0]
    with pytest.raises(ValueError):
        series_coefficients(cubic, -1)


# ========== Evaluation ==========

def test_tails_are_conjugate(cubic):
    for x in (2.0, 4.0, 6.0):
        left = asymptotic_psi(cubic, -x, Side.NEGATIVE)
        right = asymptotic_psi(cubic, x)
        assert left == pytest.approx(right.conjugate(), rel=1e-14)
        assert tail_modulus(cubic, x) == pytest.approx(abs(right), rel=1e-12)
        assert tail_modulus(cubic, -x) == pytest.approx(abs(left), rel=1e-12)


def test_tail_decays(cubic):
    moduli = [abs(asymptotic_psi(cubic, x, "positive")) for x in (2.0, 3.0, 4.0, 6.0, 8.0)]
    assert all(later < earlier for earlier, later in zip(moduli, moduli[1:]))


def test_asymptotic_psi_domain(cubic):
    with pytest.raises(DomainError):
        asymptotic_psi(cubic, 0.0)
    with pytest.raises(DomainError):
        asymptotic_psi(cubic, -2.0, Side.POSITIVE)


# ========== Residual ==========

def test_leading_residual_is_exact(cubic):
    # only (q - q^2) / x^2 survives at leading order
    for x in (4.0, 8.0, 16.0):
        assert residual_check(cubic, x) == pytest.approx(1.3125 / x**4, rel=1e-10)


@pytest.mark.parametrize("m", [3, 5, 7])
def test_residual_decays(m):
    exp = tail_parameters(m)
    residuals = [residual_check(exp, x) for x in (4.0, 8.0, 16.0)]
    assert all(later < earlier for earlier, later in zip(residuals, residuals[1:]))


def test_wrong_decay_constant_does_not_decay(cubic):
    residuals = [residual_check(cubic, x, b=cubic.b.conjugate()) for x in (4.0, 8.0, 16.0)]
    assert all(r > 1.0 for r in residuals)
    assert all(later > earlier for earlier, later in zip(residuals, residuals[1:]))


def test_higher_order_residual_is_smaller(cubic):
    assert residual_check(cubic, 8.0, order=1) < residual_check(cubic, 8.0, order=0)


def test_residual_domain(cubic):
    with pytest.raises(DomainError):
        residual_check(cubic, 0.0)
    with pytest.raises(ValueError):
        residual_check(cubic, 4.0, order=-1)

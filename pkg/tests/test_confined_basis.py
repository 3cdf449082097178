import math

import numpy as np
import pytest
from scipy.integrate import quad

from nonhermitian.confined import BasisIndex, Parity, basis_eval, coupling_integral
from nonhermitian.errors import DomainError, ParityError


def test_parity_and_frequency():
    assert BasisIndex(k=3).parity is Parity.EVEN
    assert BasisIndex(k=4).parity is Parity.ODD
    assert BasisIndex(k=4).frequency(8.0) == pytest.approx(math.pi / 2)


def test_basis_values():
    assert basis_eval(1, 12.0, 0.0) == 1.0
    assert basis_eval(2, 12.0, 0.0) == 0.0
    for k in range(1, 11):
        assert abs(basis_eval(k, 12.0, 6.0)) < 1e-12
        assert abs(basis_eval(k, 12.0, -6.0)) < 1e-12


def test_basis_accepts_arrays():
    x = np.linspace(-6.0, 6.0, 7)
    np.testing.assert_allclose(basis_eval(BasisIndex(k=2), 12.0, x), np.sin(2 * np.pi * x / 12.0))


def test_basis_outside_box():
    with pytest.raises(DomainError):
        basis_eval(1, 12.0, 6.5)


def test_overlaps_by_quadrature():
    T = 12.0
    for j in range(1, 7):
        for k in range(1, 7):
            value, _ = quad(lambda x: basis_eval(j, T, x) * basis_eval(k, T, x), -T / 2, T / 2)
            assert value / T == pytest.approx(0.5 if j == k else 0.0, abs=1e-10)


@pytest.mark.parametrize("j,k", [(1, 2), (1, 4), (3, 2), (5, 8), (7, 2)])
def test_coupling_matches_quadrature(j, k):
    T = 12.0
    value, _ = quad(lambda x: x * basis_eval(j, T, x) * basis_eval(k, T, x), -T / 2, T / 2, limit=200)
    assert coupling_integral(j, k, T) == pytest.approx(value / T, abs=1e-10)
    assert coupling_integral(k, j, T) == coupling_integral(j, k, T)


def test_coupling_scales_with_box_length():
    ratios = [coupling_integral(1, 2, T) / T for T in (4.0, 8.0, 12.0)]
    assert ratios == pytest.approx([ratios[0]] * 3, rel=1e-14)


def test_coupling_decay_with_index():
    T = 12.0
    values = [abs(coupling_integral(1, k, T)) for k in range(2, 21, 2)]
    # at least as fast as 1/k^2 ...
    scaled = [v * k * k for v, k in zip(values, range(2, 21, 2))]
    assert all(later < earlier for earlier, later in zip(scaled, scaled[1:]))
    # ... and asymptotically 4T / (pi^2 k^3) since the two sine terms nearly cancel
    for k, v in zip(range(6, 21, 2), values[2:]):
        assert v / (4 * T / (math.pi**2 * k**3)) == pytest.approx(1.0, abs=0.2)


def test_equal_parity_coupling_is_an_error():
    with pytest.raises(ParityError):
        coupling_integral(1, 3, 12.0)
    with pytest.raises(ValueError):
        coupling_integral(2, 4, 12.0)

import numpy as np
import pytest
from pydantic import ValidationError

from nonhermitian.errors import ExceptionalInput
from nonhermitian.two_level import (
    MetricTransform,
    TwoLevelModel,
    conserved_norm,
    diagonalized_evolve,
    eigenpairs,
    metric_factors,
    metric_inner_product,
    transformed_hamiltonian,
)

TAU = 5.0


@pytest.mark.parametrize("mu", [0.0, 0.25, 0.5, 0.9])
def test_transformed_hamiltonian_is_real_diagonal(mu):
    model = TwoLevelModel(mu=mu)
    system = eigenpairs(model)
    for t in np.linspace(0.0, TAU, 11):
        h1 = transformed_hamiltonian(model, TAU, t).entries
        assert np.max(np.abs(h1.imag)) < 1e-12
        np.testing.assert_allclose(h1, np.diag([system.lambda1.real, system.lambda2.real]), atol=1e-12)


def test_real_regime_metric_is_identity():
    model = TwoLevelModel(mu=2.0)
    assert metric_factors(model, TAU, 1.3) == (1.0, 1.0)
    system = eigenpairs(model)
    np.testing.assert_allclose(
        transformed_hamiltonian(model, TAU, 1.3).entries, np.diag([system.lambda1, system.lambda2]), atol=1e-15
    )


def test_metric_factors_at_reference_time():
    model = TwoLevelModel(mu=0.5)
    r, s = metric_factors(model, TAU, TAU)
    assert (r, s) == (1.0, 1.0)
    r, s = metric_factors(model, TAU, 1.0)
    assert r * s == pytest.approx(1.0)
    assert r == pytest.approx(np.exp(np.sqrt(0.75) * (1.0 - TAU)))


@pytest.mark.parametrize("mu", [0.0, 0.25, 0.5, 0.9])
def test_transformed_stationary_state_norm_is_constant(mu):
    model = TwoLevelModel(mu=mu)
    system = eigenpairs(model)
    for psi_hat0 in ([1.0, 0.0], [0.0, 1.0], [0.6, 0.8j]):
        norms = [
            conserved_norm(diagonalized_evolve(system, psi_hat0, t), model, TAU, t) for t in np.linspace(0.0, TAU, 21)
        ]
        np.testing.assert_allclose(norms, norms[0], rtol=1e-10)


def test_metric_inner_product_of_pulled_back_state():
    model = TwoLevelModel(mu=0.5)
    psi_hat = np.array([0.3 + 0.1j, -0.7j])
    r, s = metric_factors(model, TAU, 2.0)
    phi = psi_hat / np.array([r, s])
    assert metric_inner_product(phi, phi, model, TAU, 2.0) == pytest.approx(np.vdot(psi_hat, psi_hat).real)


def test_metric_undefined_at_exceptional_point():
    with pytest.raises(ExceptionalInput):
        transformed_hamiltonian(TwoLevelModel(mu=1.0), TAU, 1.0)
    with pytest.raises(ExceptionalInput):
        MetricTransform.for_model(TwoLevelModel(mu=-1.0), TAU)


def test_metric_requires_positive_tau():
    with pytest.raises(ValidationError):
        MetricTransform(tau=0.0, kappa=0.5)

# FILE: cli/commands.py

import logging

import numpy as np
import pandas as pd

from cli.schemas import RunConfig
from cli.utils_cli.tables import reproduce_table
from nonhermitian import asymptotics, confined, shooting, two_level
from nonhermitian.two_level import ExceptionalReport, TwoLevelModel

logger = logging.getLogger(__name__)


def _split(prefix: str, value: complex) -> dict[str, float]:
    return {f"{prefix}_re": float(value.real), f"{prefix}_im": float(value.imag)}


# ==== Two-Level Handlers ====

def _two_level_psi0(run: RunConfig) -> np.ndarray:
    values = run.psi0_complex or [1.0 + 0j]
    if len(values) == 1:
        values = [values[0], 0j]
    if len(values) != 2:
        raise ValueError(f"two-level psi0 takes one or two complex components, got {len(values)}")
    return np.array(values, dtype=complex)


def two_level_eig(run: RunConfig) -> pd.DataFrame:
    rows = []
    for mu in run.mu:
        system = two_level.eigenpairs(TwoLevelModel(mu=mu))
        if isinstance(system, ExceptionalReport):
            values = (system.eigenvalue, system.eigenvalue)
        else:
            values = (system.lambda1, system.lambda2)
        rows.append(
            {
                "mu": mu,
                "regime": two_level.regime(mu).value,
                **_split("lambda1", values[0]),
                **_split("lambda2", values[1]),
                "biorthogonality_defect": two_level.biorthogonality_defect(mu),
            }
        )
    return pd.DataFrame(rows)


def two_level_evolve(run: RunConfig) -> pd.DataFrame:
    model = TwoLevelModel(mu=run.mu[0])
    psi0 = _two_level_psi0(run)
    rows = []
    for t in run.t:
        psi = two_level.evolve(model, psi0, t)
        rows.append({"t": t, **_split("psi1", psi[0]), **_split("psi2", psi[1]), "norm": float(np.linalg.norm(psi))})
    return pd.DataFrame(rows)


def two_level_metric(run: RunConfig) -> pd.DataFrame:
    model = TwoLevelModel(mu=run.mu[0])
    tau = run.tau_or_default
    two_level.MetricTransform.for_model(model, tau)
    system = two_level.eigenpairs(model)
    A, B, _ = two_level.expansion(system, _two_level_psi0(run))

    rows = []
    for t in run.t:
        r, s = two_level.metric_factors(model, tau, t)
        h1 = two_level.transformed_hamiltonian(model, tau, t).entries
        psi_hat = two_level.diagonalized_evolve(system, [A, B], t)
        rows.append(
            {
                "t": t,
                "tau": tau,
                "r": r,
                "s": s,
                **_split("h1_11", h1[0, 0]),
                **_split("h1_22", h1[1, 1]),
                "conserved_norm": two_level.conserved_norm(psi_hat, model, tau, t),
            }
        )
    return pd.DataFrame(rows)


def two_level_fixed_basis(run: RunConfig) -> pd.DataFrame:
    rows = []
    for mu in run.mu:
        M = two_level.fixed_basis_system(mu).entries
        for (i, j), value in np.ndenumerate(M):
            rows.append({"mu": mu, "row": i + 1, "col": j + 1, **_split("m", value)})
    return pd.DataFrame(rows)


# ==== Confined Handlers ====

def _model(run: RunConfig) -> confined.ConfinedModel:
    return confined.assemble(run.T[0], run.mu[0], run.N[0], run.coupling)


def _initial_coefficients(run: RunConfig, model: confined.ConfinedModel) -> np.ndarray:
    if run.psi0 is not None:
        return np.array(run.psi0_complex, dtype=complex)
    if run.state == 0:
        rng = np.random.default_rng(run.seed)
        coeffs = rng.standard_normal(model.dim) + 1j * rng.standard_normal(model.dim)
        return coeffs / np.linalg.norm(coeffs)
    if run.state > model.dim:
        raise ValueError(f"state {run.state} exceeds the basis size {model.dim}")
    return confined.decompose(model).eigenvectors[:, run.state - 1]


def confined_assemble(run: RunConfig) -> pd.DataFrame:
    h = _model(run).matrix.entries
    rows = [{"row": i + 1, "col": j + 1, **_split("h", value)} for (i, j), value in np.ndenumerate(h) if value != 0]
    return pd.DataFrame(rows)


def spectrum_frame(classified: confined.ClassifiedSpectrum) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "index": entry.index + 1,
                "re": entry.value.real,
                "im": entry.value.imag,
                "label": entry.label.value,
                "partner": None if entry.partner is None else entry.partner + 1,
                "eps_re": entry.diagonal_deviation.real,
                "eps_im": entry.diagonal_deviation.imag,
            }
            for entry in classified.entries
        ]
    ).astype({"partner": "Int64"})


def confined_spectrum(run: RunConfig) -> pd.DataFrame:
    return spectrum_frame(confined.spectrum(_model(run), run.tol_im))


def confined_evolve(run: RunConfig) -> pd.DataFrame:
    model = _model(run)
    coeffs0 = _initial_coefficients(run, model)
    rows = []
    for t in run.t:
        result = confined.evolve_confined(model, coeffs0, t)
        for k, value in enumerate(result.state, start=1):
            rows.append({"t": t, "k": k, **_split("c", value), "abs": abs(value), "method": result.method})
    return pd.DataFrame(rows)


def confined_wavefunction(run: RunConfig) -> pd.DataFrame:
    model = _model(run)
    return confined.density_series(model, _initial_coefficients(run, model), run.points)


# ==== Sweep / Table / Shoot / Asymptotics ====

def sweep(run: RunConfig) -> pd.DataFrame:
    result = confined.sweep(run.T, run.mu, run.N, run.coupling, run.tol_im)
    rows = []
    for record in result.records:
        key = {"T": record.T, "mu": record.mu, "N": record.N, "pair_count": record.pair_count}
        if not record.ok:
            rows.append({**key, "state": None, "re": None, "im": None, "label": None, "error": record.error})
            continue
        for state, (value, label) in enumerate(zip(record.lowest, record.labels), start=1):
            rows.append({**key, "state": state, "re": value.real, "im": value.imag, "label": label, "error": None})
    return pd.DataFrame(rows).astype({"pair_count": "Int64", "state": "Int64"})


def table(run: RunConfig) -> pd.DataFrame:
    return reproduce_table(int(run.action), run.coupling, run.tol_im)


def shoot(run: RunConfig) -> pd.DataFrame:
    T, mu = run.T[0], run.mu[0]
    classified = confined.spectrum(confined.assemble(T, mu, run.N[0], run.coupling), run.tol_im)
    problem = shooting.ShootingProblem(T=T, mu=mu, step=T / run.step_divisor)
    rows = []
    for entry in classified.entries[: run.count]:
        refined = shooting.refine(problem, entry.value)
        rows.append(
            {
                "state": entry.index + 1,
                **_split("seed", entry.value),
                **_split("refined", refined),
                "shift": abs(refined - entry.value),
            }
        )
    return pd.DataFrame(rows)


def tail(run: RunConfig) -> pd.DataFrame:
    rows = []
    for m in run.m:
        exp = asymptotics.tail_parameters(m)
        row = {"m": m, "p": exp.p, **_split("b", exp.b), "q": exp.q, "consistent": asymptotics.consistency_flag(m)}
        for x in run.x:
            row[f"residual_x{x:g}"] = asymptotics.residual_check(exp, x)
        rows.append(row)
    return pd.DataFrame(rows)


# ==== Handler Mapping ====
HANDLER_MAP = {
    ("two-level", "eig"): two_level_eig,
    ("two-level", "evolve"): two_level_evolve,
    ("two-level", "metric"): two_level_metric,
    ("two-level", "fixed-basis"): two_level_fixed_basis,
    ("confined", "assemble"): confined_assemble,
    ("confined", "spectrum"): confined_spectrum,
    ("confined", "evolve"): confined_evolve,
    ("confined", "wavefunction"): confined_wavefunction,
    ("sweep", None): sweep,
    ("table", "1"): table,
    ("table", "2"): table,
    ("table", "3"): table,
    ("shoot", None): shoot,
    ("asymptotics", None): tail,
}


def run_command(run: RunConfig) -> pd.DataFrame:
    handler = HANDLER_MAP[(run.command, run.action)]
    logger.info(f"[cli] running {run.command} {run.action or ''}".rstrip())
    return handler(run)

# FILE: nonhermitian/linalg/eigensolver.py

import logging
import warnings

import numpy as np
import scipy.linalg

from nonhermitian import config
from nonhermitian.errors import NonConvergence, SingularMatrix
from nonhermitian.schemas import ComplexMatrix, LinearSolution, SpectralDecomposition

logger = logging.getLogger(__name__)

# Real parts closer than this (relative) count as ties in the spectral ordering.
_TIE_RTOL = 1e-9


# ========== Ordering & Normalization ==========

def spectral_order(values: np.ndarray) -> np.ndarray:
    """Permutation sorting by ascending real part, ties by ascending imaginary part."""
    values = np.asarray(values, dtype=complex)
    order = np.argsort(values.real, kind="stable")
    if values.size < 2:
        return order

    scale = max(1.0, float(np.max(np.abs(values.real))))
    groups, current = [], [order[0]]
    for idx in order[1:]:
        if values.real[idx] - values.real[current[0]] <= _TIE_RTOL * scale:
            current.append(idx)
        else:
            groups.append(current)
            current = [idx]
    groups.append(current)

    return np.array([i for group in groups for i in sorted(group, key=lambda j: values.imag[j])])


def normalize_columns(vectors: np.ndarray) -> np.ndarray:
    """Unit 2-norm columns with the first non-negligible component real positive."""
    vectors = np.array(vectors, dtype=complex, copy=True)
    for k in range(vectors.shape[1]):
        column = vectors[:, k]
        column /= np.linalg.norm(column)
        magnitudes = np.abs(column)
        lead = int(np.flatnonzero(magnitudes > 1e-12 * magnitudes.max())[0])
        column *= np.conj(column[lead]) / magnitudes[lead]
        # the phase rotation is exact in modulus only up to rounding
        column /= np.linalg.norm(column)
        vectors[:, k] = column
    return vectors


def _residuals(a: np.ndarray, values: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    return np.linalg.norm(a @ vectors - vectors * values, axis=0)


def _inverse_iteration(a: np.ndarray, value: complex) -> np.ndarray:
    shift = value * (1.0 + config.INVERSE_ITERATION_SHIFT) if value != 0 else config.INVERSE_ITERATION_SHIFT
    rng = np.random.default_rng(0)
    start = rng.standard_normal(a.shape[0]) + 1j * rng.standard_normal(a.shape[0])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        vector = scipy.linalg.solve(a - shift * np.eye(a.shape[0]), start)
    return vector / np.linalg.norm(vector)


# ========== Decomposition ==========

def build_decomposition(matrix: ComplexMatrix, values, vectors) -> SpectralDecomposition:
    """
    Order, phase-normalize and validate externally produced eigenpairs of `matrix`.

    Columns whose residual misses the contract get one shifted inverse-iteration
    solve before the contract is enforced.
    """
    a = matrix.entries
    values = np.asarray(values, dtype=complex)
    order = spectral_order(values)
    values = values[order]
    vectors = normalize_columns(np.asarray(vectors, dtype=complex)[:, order])

    norm = matrix.frobenius_norm
    residuals = _residuals(a, values, vectors)
    bound = config.RESIDUAL_RTOL * norm
    for k in np.flatnonzero(residuals > bound):
        logger.debug(f"[eig] refining pair {k}: residual {residuals[k]:.3e} > {bound:.3e}")
        vectors[:, k] = normalize_columns(_inverse_iteration(a, values[k])[:, None])[:, 0]
    residuals = _residuals(a, values, vectors)

    return SpectralDecomposition(
        eigenvalues=values,
        eigenvectors=vectors,
        residuals=residuals,
        matrix_norm=norm,
    )


def eig(matrix: ComplexMatrix) -> SpectralDecomposition:
    """
    Full eigendecomposition of a dense complex matrix.

    Delegates to LAPACK (balanced Hessenberg reduction followed by shifted QR);
    matrices with vanishing imaginary part take the real path so conjugate
    pairs come out exactly conjugate.

    Raises:
        NonConvergence: the QR iteration failed to deflate.
    """
    a = matrix.entries
    real_input = not np.any(a.imag)
    try:
        values, vectors = scipy.linalg.eig(a.real if real_input else a, check_finite=False)
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as e:
        logger.error(f"[eig] QR iteration failed on a {matrix.dim}x{matrix.dim} matrix: {str(e)}")
        raise NonConvergence(f"eigenvalue iteration did not converge: {e}") from e

    decomposition = build_decomposition(matrix, values, vectors)
    logger.debug(f"[eig] dim={matrix.dim} max residual={decomposition.residuals.max():.3e}")
    return decomposition


# ========== Linear Solves ==========

def condition_estimate(matrix: ComplexMatrix) -> float:
    """2-norm condition number; infinite for exactly singular input."""
    singular = np.linalg.svd(matrix.entries, compute_uv=False)
    if singular[-1] == 0.0:
        return float("inf")
    return float(singular[0] / singular[-1])


def solve_linear(matrix: ComplexMatrix, rhs) -> LinearSolution:
    """
    Solve M x = rhs by partial-pivot LU and report the condition estimate.

    Raises:
        SingularMatrix: a pivot is below PIVOT_RTOL * ||M||_F.
    """
    a = matrix.entries
    rhs = np.asarray(rhs, dtype=complex)
    if rhs.shape != (matrix.dim,):
        raise ValueError(f"rhs must have length {matrix.dim}, got shape {rhs.shape}")

    norm = matrix.frobenius_norm
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(a, check_finite=False)

    smallest = float(np.min(np.abs(np.diag(lu))))
    if smallest < config.PIVOT_RTOL * norm:
        raise SingularMatrix(f"pivot {smallest:.3e} below {config.PIVOT_RTOL:.0e} * ||M||_F ({norm:.3e})")

    x = scipy.linalg.lu_solve((lu, piv), rhs, check_finite=False)
    residual = float(np.linalg.norm(a @ x - rhs))
    if residual > config.RESIDUAL_RTOL * norm * np.linalg.norm(x):
        # one step of iterative refinement
        x = x + scipy.linalg.lu_solve((lu, piv), rhs - a @ x, check_finite=False)
        residual = float(np.linalg.norm(a @ x - rhs))
        logger.warning(f"[solve] refined solution, residual now {residual:.3e}")

    condition = condition_estimate(matrix)
    logger.debug(f"[solve] dim={matrix.dim} cond={condition:.3e} residual={residual:.3e}")
    return LinearSolution(solution=x, condition=condition, residual=residual)

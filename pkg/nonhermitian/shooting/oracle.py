# FILE: nonhermitian/shooting/oracle.py

import cmath
import logging
import math

from pydantic import model_validator

from nonhermitian import config
from nonhermitian.errors import NoConvergence, OverflowGuard
from nonhermitian.schemas import FrozenModel

logger = logging.getLogger(__name__)

# Solutions are rescaled once |psi| + |psi'| passes this; the scale is tracked in log form.
_RENORMALIZE_AT = 1e150
# log(1e300)
_LOG_OVERFLOW = 690.0


# ========== Problem ==========

class ShootingProblem(FrozenModel):
    """-psi'' + i mu x psi = E psi on (-T/2, T/2) with psi(+-T/2) = 0."""

    T: float
    mu: float
    E: complex = 0j
    step: float | None = None

    @model_validator(mode="before")
    @classmethod
    def _default_step(cls, data):
        if isinstance(data, dict) and data.get("step") is None and data.get("T"):
            data = {**data, "step": float(data["T"]) / config.SHOOT_STEPS}
        return data

    @model_validator(mode="after")
    def _check_step(self):
        if not self.T > 0:
            raise ValueError(f"T must be positive, got {self.T}")
        if not 0 < self.step <= self.T / 100.0:
            raise ValueError(f"step must lie in (0, T/100], got {self.step}")
        return self

    @property
    def steps_per_half(self) -> int:
        return max(1, round(self.T / (2.0 * self.step)))

    def at(self, E: complex) -> "ShootingProblem":
        return self.model_copy(update={"E": complex(E)})


class _Shot(FrozenModel):
    value: complex
    slope: complex
    log_scale: float


def _shoot(problem: ShootingProblem, start: float) -> _Shot:
    """RK4 on (psi, psi') from x=start with psi=0, psi'=1 to the matching point x=0."""
    mu, E = problem.mu, problem.E
    n = problem.steps_per_half
    h = -start / n
    h2 = h / 2.0

    def accel(x: float, y: complex) -> complex:
        return (1j * mu * x - E) * y

    x, y, v, log_scale = start, 0j, 1 + 0j, 0.0
    for _ in range(n):
        k1y, k1v = v, accel(x, y)
        k2y, k2v = v + h2 * k1v, accel(x + h2, y + h2 * k1y)
        k3y, k3v = v + h2 * k2v, accel(x + h2, y + h2 * k2y)
        k4y, k4v = v + h * k3v, accel(x + h, y + h * k3y)
        y += h * (k1y + 2 * k2y + 2 * k3y + k4y) / 6.0
        v += h * (k1v + 2 * k2v + 2 * k3v + k4v) / 6.0
        x += h

        size = abs(y) + abs(v)
        if size > _RENORMALIZE_AT:
            y, v = y / size, v / size
            log_scale += math.log(size)
        elif not math.isfinite(size):
            raise OverflowGuard(f"shooting solution diverged at x={x:.6g} for E={E}")

    return _Shot(value=y, slope=v, log_scale=log_scale)


def _matched(problem: ShootingProblem) -> tuple[complex, float, float]:
    left = _shoot(problem, -problem.T / 2.0)
    right = _shoot(problem, problem.T / 2.0)
    log_scale = left.log_scale + right.log_scale
    if log_scale > _LOG_OVERFLOW:
        raise OverflowGuard(f"Wronskian magnitude exceeds 1e300 at E={problem.E}")
    wronskian = left.value * right.slope - left.slope * right.value
    scale = math.hypot(abs(left.value), abs(left.slope)) * math.hypot(abs(right.value), abs(right.slope))
    return wronskian, scale, log_scale


# ========== Operations ==========

def mismatch(problem: ShootingProblem) -> complex:
    """Wronskian psi_L psi_R' - psi_L' psi_R at x = 0; zero iff E is an eigenvalue."""
    wronskian, _, log_scale = _matched(problem)
    return wronskian * math.exp(log_scale)


def mismatch_scale(problem: ShootingProblem) -> float:
    _, scale, log_scale = _matched(problem)
    return scale * math.exp(log_scale)


def refine(problem: ShootingProblem, E0: complex, max_iter: int | None = None) -> complex:
    """
    Complex secant iteration on the matching Wronskian, seeded at E0.

    Converged once |W(E)| < 1e-10 times the solution scale at the matching point.
    Raises NoConvergence when max_iter iterations do not get there.
    """
    max_iter = config.SHOOT_MAX_ITER if max_iter is None else max_iter
    E0 = complex(E0)

    w0, scale0, log0 = _matched(problem.at(E0))
    if abs(w0) < 1e-10 * scale0:
        return E0

    def normalized(w: complex, log_scale: float) -> complex:
        # W in units of the seed scale
        return w * math.exp(log_scale - log0) / scale0

    seed, previous, f_previous = E0, E0, w0 / scale0
    current = E0 + 1e-4 * max(1.0, abs(E0))
    for iteration in range(1, max_iter + 1):
        w, scale, log_scale = _matched(problem.at(current))
        if abs(w) < 1e-10 * scale:
            logger.debug(f"[shoot] E={current:.10g} after {iteration} iterations, |E-E0|={abs(current - seed):.3e}")
            return current
        f_current = normalized(w, log_scale)
        if f_current == f_previous or not cmath.isfinite(f_current):
            break
        previous, current, f_previous = current, current - f_current * (current - previous) / (f_current - f_previous), f_current

    logger.warning(f"[shoot] no convergence from E0={seed:.10g}")
    raise NoConvergence(f"secant refinement from E0={seed:.10g} did not converge in {max_iter} iterations")


def refine_many(problem: ShootingProblem, seeds, max_iter: int | None = None) -> list[complex]:
    return [refine(problem, seed, max_iter) for seed in seeds]

# FILE: cli/schemas.py

from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from nonhermitian import __version__, config
from nonhermitian.confined import Coupling

Command = Literal["two-level", "confined", "sweep", "table", "shoot", "asymptotics"]

ACTIONS: dict[str, tuple[str, ...]] = {
    "two-level": ("eig", "evolve", "metric", "fixed-basis"),
    "confined": ("assemble", "spectrum", "evolve", "wavefunction"),
    "table": ("1", "2", "3"),
}


# ========== Request Schema ==========

class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Command
    action: Optional[str] = None
    T: list[float] = [12.0]
    mu: list[float] = [1.0]
    N: list[int] = [40]
    tau: Optional[float] = None
    t: list[float] = [0.0]
    psi0: Optional[list[float]] = None
    coupling: Coupling = Coupling(config.DEFAULT_COUPLING)
    tol_im: Optional[float] = None
    format: Literal["csv", "json"] = "csv"
    out: Optional[str] = None
    seed: int = 0
    state: int = 1
    points: int = 201
    count: int = 4
    step_divisor: int = 4000
    m: list[int] = [1, 3, 5, 7, 9]
    x: list[float] = [4.0, 8.0]

    @field_validator("T", "x")
    @classmethod
    def _positive(cls, values: list[float]) -> list[float]:
        if not values or any(v <= 0 for v in values):
            raise ValueError("values must be positive")
        return values

    @field_validator("N", "m")
    @classmethod
    def _positive_int(cls, values: list[int]) -> list[int]:
        if not values or any(v < 1 for v in values):
            raise ValueError("values must be positive integers")
        return values

    @field_validator("t")
    @classmethod
    def _non_negative(cls, values: list[float]) -> list[float]:
        if not values or any(v < 0 for v in values):
            raise ValueError("times must be non-negative")
        return values

    @field_validator("mu")
    @classmethod
    def _non_empty(cls, values: list[float]) -> list[float]:
        if not values:
            raise ValueError("mu list is empty")
        return values

    @field_validator("tau", "tol_im")
    @classmethod
    def _optional_positive(cls, value: Optional[float]) -> Optional[float]:
        if value is not None and value <= 0:
            raise ValueError("must be positive")
        return value

    @field_validator("psi0")
    @classmethod
    def _pairs(cls, values: Optional[list[float]]) -> Optional[list[float]]:
        if values is not None and (not values or len(values) % 2):
            raise ValueError("psi0 takes re,im pairs")
        return values

    @model_validator(mode="after")
    def _check(self):
        allowed = ACTIONS.get(self.command)
        if allowed is not None and self.action not in allowed:
            raise ValueError(f"{self.command} needs one of {', '.join(allowed)}, got {self.action}")
        if self.state < 0:
            raise ValueError("state must be >= 1 (0 selects seeded random coefficients)")
        if self.points < 2 or self.count < 1 or self.step_divisor < 100:
            raise ValueError("points >= 2, count >= 1 and step-divisor >= 100 are required")
        if any(m % 2 == 0 for m in self.m):
            raise ValueError("m must be odd")
        return self

    @property
    def psi0_complex(self) -> Optional[list[complex]]:
        if self.psi0 is None:
            return None
        return [complex(re, im) for re, im in zip(self.psi0[::2], self.psi0[1::2])]

    @property
    def tau_or_default(self) -> float:
        if self.tau is not None:
            return self.tau
        return max(self.t) if max(self.t) > 0 else 1.0


# ========== Response Schemas ==========

Cell = bool | int | float | str | None


class ResultEnvelope(BaseModel):
    meta: dict[str, Any]
    data: list[dict[str, Cell]]


class ErrorRecord(BaseModel):
    error: str
    detail: str


def envelope_meta(run: RunConfig) -> dict[str, Any]:
    return {"version": __version__, "config": run.model_dump(mode="json")}

from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import Optional, Tuple
from enum import Enum

import numpy as np


class Tier(str, Enum):
    FULL = "full"
    EXACT4 = "exact4"
    REDUCED = "reduced"


TIER_COLUMNS = {
    Tier.FULL: ("S", "D1", "D2", "R1", "R2"),
    Tier.EXACT4: ("D1", "D2", "R1", "R2"),
    Tier.REDUCED: ("D1", "D2"),
}


class IntegratorMethod(str, Enum):
    FIXED_RK4 = "fixed_rk4"
    ADAPTIVE_RK = "adaptive_rk"


class TerminalReason(str, Enum):
    REACHED_T_MAX = "reached_t_max"
    CONVERGED = "converged_to_equilibrium"
    LEFT_WINDOW = "left_window"
    STEP_FAILURE = "step_failure"


class IntegratorOptions(BaseModel):
    """Tolerances left as ``None`` are resolved against N at integration time:
    abs_tol -> 1e-8 N, equilibrium_stop_tol -> 1e-7 N (0 disables the stop).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    method: IntegratorMethod = IntegratorMethod.ADAPTIVE_RK
    step: float = Field(0.01, gt=0)
    abs_tol: Optional[float] = Field(None, gt=0)
    rel_tol: float = Field(1e-8, gt=0)
    initial_step: float = Field(0.1, gt=0)
    min_step: float = Field(1e-10, gt=0)
    max_growth: float = Field(5.0, gt=1)
    t_max: float = Field(200.0, gt=0)
    equilibrium_stop_tol: Optional[float] = Field(None, ge=0)
    characteristic_time: float = Field(10.0, gt=0)
    max_steps: int = Field(1_000_000, gt=0)
    output_step: Optional[float] = Field(None, gt=0)
    direction: int = 1
    bounds: Optional[Tuple[float, float, float, float]] = None

    @model_validator(mode="after")
    def _check_direction(self):
        if self.direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")
        return self


class TrajectoryStats(BaseModel):
    steps_taken: int = 0
    steps_rejected: int = 0
    rhs_evaluations: int = 0


class Trajectory(BaseModel):
    """Samples with strictly increasing ``times`` (years); ``states`` is (n, dim)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    tier: Tier
    method: IntegratorMethod
    direction: int = 1
    times: np.ndarray
    states: np.ndarray
    terminal_reason: TerminalReason
    stats: TrajectoryStats
    message: Optional[str] = None

    @property
    def columns(self) -> Tuple[str, ...]:
        return TIER_COLUMNS[self.tier]

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]

    @property
    def final_time(self) -> float:
        return float(self.times[-1])

    def at(self, t: float) -> np.ndarray:
        """Linear interpolation; clamps to the end samples outside the range."""
        return np.array([np.interp(t, self.times, self.states[:, k]) for k in range(self.states.shape[1])])

    def resampled(self, times: np.ndarray) -> np.ndarray:
        return np.column_stack([np.interp(times, self.times, self.states[:, k]) for k in range(self.states.shape[1])])


class ReductionErrorReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    sup_d_difference: float
    terminal_d_difference: float
    sup_qss_deviation: float
    exact4_terminal: Tuple[float, float, float, float]
    reduced_terminal: Tuple[float, float]
    exact4_reason: TerminalReason
    reduced_reason: TerminalReason
    samples: int

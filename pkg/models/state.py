from pydantic import BaseModel, ConfigDict, Field
from typing import Sequence

import numpy as np


class PopulationState(BaseModel):
    """The five compartments S, D1, D2, R1, R2 (persons)."""

    model_config = ConfigDict(frozen=True)

    s: float = Field(..., ge=0)
    d1: float = Field(..., ge=0)
    d2: float = Field(..., ge=0)
    r1: float = Field(..., ge=0)
    r2: float = Field(..., ge=0)

    @property
    def total(self) -> float:
        return self.s + self.d1 + self.d2 + self.r1 + self.r2

    def on_manifold(self, n_total: float, rel_tol: float = 1e-9) -> bool:
        return abs(self.total - n_total) <= rel_tol * n_total

    def as_array(self) -> np.ndarray:
        return np.array([self.s, self.d1, self.d2, self.r1, self.r2])

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "PopulationState":
        s, d1, d2, r1, r2 = (float(v) for v in values)
        return cls(s=s, d1=d1, d2=d2, r1=r1, r2=r2)


class Exact4State(BaseModel):
    """D1, D2, R1, R2 with S eliminated through the population constraint."""

    model_config = ConfigDict(frozen=True)

    d1: float = Field(..., ge=0)
    d2: float = Field(..., ge=0)
    r1: float = Field(..., ge=0)
    r2: float = Field(..., ge=0)

    @property
    def total(self) -> float:
        return self.d1 + self.d2 + self.r1 + self.r2

    def as_array(self) -> np.ndarray:
        return np.array([self.d1, self.d2, self.r1, self.r2])

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "Exact4State":
        d1, d2, r1, r2 = (float(v) for v in values)
        return cls(d1=d1, d2=d2, r1=r1, r2=r2)


class ReducedState(BaseModel):
    model_config = ConfigDict(frozen=True)

    d1: float = Field(..., ge=0)
    d2: float = Field(..., ge=0)

    def as_array(self) -> np.ndarray:
        return np.array([self.d1, self.d2])

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "ReducedState":
        d1, d2 = (float(v) for v in values)
        return cls(d1=d1, d2=d2)


class PhasePoint(BaseModel):
    """A point of the (D1, D2) plane; may lie outside the feasible quadrant."""

    model_config = ConfigDict(frozen=True)

    d1: float
    d2: float

    def as_array(self) -> np.ndarray:
        return np.array([self.d1, self.d2])

    def scaled(self, factor: float) -> "PhasePoint":
        return PhasePoint(d1=self.d1 * factor, d2=self.d2 * factor)

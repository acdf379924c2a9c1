from pydantic import BaseModel, ConfigDict, Field
from typing import ClassVar, Optional, Tuple
from enum import Enum

import numpy as np


class SpecialCase(str, Enum):
    ZERO_RATE = "zero_rate"
    ONE_WAY_SWITCHING = "one_way_switching"
    DRUG_ABSENT = "drug_absent"
    FATAL_DISEASE = "fatal_disease"


class SpecialCaseFlag(BaseModel):
    model_config = ConfigDict(frozen=True)

    case: SpecialCase
    drug: Optional[int] = None
    parameter: Optional[str] = None
    detail: str


class ModelParameters(BaseModel):
    """Rates are fractions per year; ``n_total`` is a head count (JSON key ``N``).

    Values are taken as given; ``analysis.coefficients.validate_parameters``
    checks them.
    """

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    RATE_FIELDS: ClassVar[Tuple[str, ...]] = (
        "beta1", "beta2",
        "gamma1", "gamma2",
        "delta1", "delta2",
        "alpha1", "alpha2",
        "mu",
    )

    beta1: float
    beta2: float
    gamma1: float
    gamma2: float
    delta1: float
    delta2: float
    alpha1: float
    alpha2: float
    mu: float
    n_total: float = Field(..., alias="N")

    def beta(self, i: int) -> float:
        return getattr(self, f"beta{i}")

    def gamma(self, i: int) -> float:
        return getattr(self, f"gamma{i}")

    def delta(self, i: int) -> float:
        return getattr(self, f"delta{i}")

    def alpha(self, i: int) -> float:
        return getattr(self, f"alpha{i}")

    def with_updates(self, **changes) -> "ModelParameters":
        data = self.model_dump(include=set(self.RATE_FIELDS) | {"n_total"})
        data.update(changes)
        return ModelParameters(**data)


class ValidatedParameters(ModelParameters):
    """Parameters that passed validation, plus the special regimes they fall in."""

    flags: Tuple[SpecialCaseFlag, ...] = ()

    def closure_factor(self, i: int) -> float:
        """gamma_i / (delta_i + mu): recovered-per-addicted ratio at steady state."""
        return self.gamma(i) / (self.delta(i) + self.mu)

    def has_flag(self, case: SpecialCase) -> bool:
        return any(flag.case == case for flag in self.flags)

    def raw(self) -> ModelParameters:
        return self.with_updates()


class LVCoefficients(BaseModel):
    """Competitive Lotka-Volterra form of the reduced system.

    dD_i/dt = r_i D_i - (D_i / N) (a_i1 D_1 + a_i2 D_2)
    """

    model_config = ConfigDict(frozen=True)

    r1: float
    r2: float
    a11: float
    a12: float
    a21: float
    a22: float
    n_total: float

    def growth(self) -> np.ndarray:
        return np.array([self.r1, self.r2])

    def competition(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]])

    def rescaled(self, n_total: float) -> "LVCoefficients":
        return self.model_copy(update={"n_total": n_total})

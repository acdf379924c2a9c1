from pydantic import BaseModel, ConfigDict
from typing import List, Tuple
from enum import Enum

import numpy as np

from models.equilibrium import Equilibrium


class StabilityClass(str, Enum):
    STABLE_NODE = "stable_node"
    UNSTABLE_NODE = "unstable_node"
    SADDLE = "saddle"
    STABLE_SPIRAL = "stable_spiral"
    UNSTABLE_SPIRAL = "unstable_spiral"
    CENTER = "center"
    NON_HYPERBOLIC = "non_hyperbolic_degenerate"


class OriginCase(str, Enum):
    BOTH_BELOW_MU = "both_below_mu_stable_node"
    BOTH_ABOVE_MU = "both_above_mu_unstable_node"
    MIXED = "mixed_saddle"
    BOUNDARY = "boundary_non_hyperbolic"


# Origin case -> class that the general classifier must agree with.
ORIGIN_CASE_CLASS = {
    OriginCase.BOTH_BELOW_MU: StabilityClass.STABLE_NODE,
    OriginCase.BOTH_ABOVE_MU: StabilityClass.UNSTABLE_NODE,
    OriginCase.MIXED: StabilityClass.SADDLE,
    OriginCase.BOUNDARY: StabilityClass.NON_HYPERBOLIC,
}


class Jacobian2(BaseModel):
    model_config = ConfigDict(frozen=True)

    j11: float
    j12: float
    j21: float
    j22: float

    @property
    def trace(self) -> float:
        return self.j11 + self.j22

    @property
    def determinant(self) -> float:
        return self.j11 * self.j22 - self.j12 * self.j21

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.j11, self.j12], [self.j21, self.j22]])

    @classmethod
    def from_matrix(cls, m) -> "Jacobian2":
        return cls(j11=float(m[0][0]), j12=float(m[0][1]), j21=float(m[1][0]), j22=float(m[1][1]))


class Eigenvalue(BaseModel):
    model_config = ConfigDict(frozen=True)

    real: float
    imag: float = 0.0

    @property
    def value(self) -> complex:
        return complex(self.real, self.imag)


class EigenDecomposition(BaseModel):
    """Eigenvectors are unit norm; empty for complex pairs."""

    model_config = ConfigDict(frozen=True)

    eigenvalues: Tuple[Eigenvalue, Eigenvalue]
    eigenvectors: List[Tuple[float, float]] = []


class StabilityReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    eigenvalues: Tuple[Eigenvalue, Eigenvalue]
    eigenvectors: List[Tuple[float, float]] = []
    stability: StabilityClass
    hyperbolic: bool

    @property
    def is_stable(self) -> bool:
        return self.stability in (StabilityClass.STABLE_NODE, StabilityClass.STABLE_SPIRAL)


class OriginAnalysis(BaseModel):
    model_config = ConfigDict(frozen=True)

    theta1: float
    theta2: float
    mu: float
    case: OriginCase

    @property
    def eigenvalues(self) -> Tuple[float, float]:
        return (self.theta1 - self.mu, self.theta2 - self.mu)


class AssessedEquilibrium(BaseModel):
    model_config = ConfigDict(frozen=True)

    equilibrium: Equilibrium
    jacobian: Jacobian2
    report: StabilityReport

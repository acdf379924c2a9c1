from pydantic import BaseModel, ConfigDict
from typing import List, Optional
from enum import Enum

from models.state import PhasePoint


class EquilibriumKind(str, Enum):
    ORIGIN = "origin"
    AXIS1 = "axis1"
    AXIS2 = "axis2"
    INTERIOR = "interior"


class InteriorOutcome(str, Enum):
    UNIQUE = "unique"
    NONE = "none"
    CONTINUUM = "continuum"
    COINCIDENT = "coincident"


class Equilibrium(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: EquilibriumKind
    location: PhasePoint
    nonnegative: bool
    within_population: bool

    @property
    def feasible(self) -> bool:
        return self.nonnegative and self.within_population


class ContinuumLine(BaseModel):
    """coef_d1 * D1 + coef_d2 * D2 = rhs; the line of equilibria when det = 0."""

    model_config = ConfigDict(frozen=True)

    coef_d1: float
    coef_d2: float
    rhs: float


class InteriorSolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    outcome: InteriorOutcome
    equilibrium: Optional[Equilibrium] = None
    line: Optional[ContinuumLine] = None
    determinant: float


class EquilibriumSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    points: List[Equilibrium]
    degenerate: bool = False
    continuum: Optional[ContinuumLine] = None
    interior_outcome: InteriorOutcome
    determinant: float

    def get(self, kind: EquilibriumKind) -> Optional[Equilibrium]:
        for point in self.points:
            if point.kind == kind:
                return point
        return None

    @property
    def feasible_points(self) -> List[Equilibrium]:
        return [point for point in self.points if point.feasible]

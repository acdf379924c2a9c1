from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import List, Optional, Tuple
from enum import Enum

from models.equilibrium import EquilibriumSet
from models.stability import AssessedEquilibrium
from models.trajectory import Trajectory


class Window(BaseModel):
    """Rectangle of the (D1, D2) plane, persons."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    d1: Tuple[float, float]
    d2: Tuple[float, float]

    @model_validator(mode="after")
    def _ordered(self):
        if self.d1[0] > self.d1[1] or self.d2[0] > self.d2[1]:
            raise ValueError("window ranges must be (min, max)")
        return self

    @classmethod
    def square(cls, size: float) -> "Window":
        return cls(d1=(0.0, size), d2=(0.0, size))

    @property
    def width(self) -> float:
        return self.d1[1] - self.d1[0]

    @property
    def height(self) -> float:
        return self.d2[1] - self.d2[0]

    @property
    def is_empty(self) -> bool:
        return self.width <= 0.0 or self.height <= 0.0

    def bounds(self, margin: float = 0.0) -> Tuple[float, float, float, float]:
        dx = margin * self.width
        dy = margin * self.height
        return (self.d1[0] - dx, self.d1[1] + dx, self.d2[0] - dy, self.d2[1] + dy)

    def scaled(self, factor: float) -> "Window":
        return Window(d1=(self.d1[0] * factor, self.d1[1] * factor),
                      d2=(self.d2[0] * factor, self.d2[1] * factor))


class NullclineLabel(str, Enum):
    # D1-nullclines: d1 = 0 and the D1 interior line; likewise for D2
    D1_AXIS = "D1-axis"
    D2_AXIS = "D2-axis"
    D1_INTERIOR = "D1-interior"
    D2_INTERIOR = "D2-interior"


class NullclineSegment(BaseModel):
    """Clipped piece of the line coef_d1 * D1 + coef_d2 * D2 = rhs."""

    model_config = ConfigDict(frozen=True)

    label: NullclineLabel
    start: Tuple[float, float]
    end: Tuple[float, float]
    coef_d1: float
    coef_d2: float
    rhs: float


class Nullclines(BaseModel):
    model_config = ConfigDict(frozen=True)

    segments: List[NullclineSegment]
    notes: List[str] = []


class BranchKind(str, Enum):
    UNSTABLE = "unstable"
    STABLE = "stable"


class SeparatrixBranch(BaseModel):
    """One half-manifold of a saddle; stable branches are traced in reverse time."""

    model_config = ConfigDict(frozen=True)

    kind: BranchKind
    sign: int
    seed: Tuple[float, float]
    points: List[Tuple[float, float]] = []
    terminal_reason: Optional[str] = None
    skipped: bool = False


class PhasePortrait(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    window: Window
    n_total: float
    nullclines: Nullclines
    equilibria: EquilibriumSet
    assessments: List[AssessedEquilibrium]
    separatrices: List[SeparatrixBranch] = []
    trajectories: List[Trajectory] = Field(default_factory=list)

from pydantic import BaseModel, ConfigDict
from typing import List
from enum import Enum

from models.equilibrium import EquilibriumKind, EquilibriumSet
from models.parameters import LVCoefficients
from models.stability import AssessedEquilibrium, OriginAnalysis


class RegimeClass(str, Enum):
    EXTINCTION = "extinction"
    EXCLUSION_1 = "exclusion1"
    EXCLUSION_2 = "exclusion2"
    BISTABLE_EXCLUSION = "bistable_exclusion"
    COEXISTENCE = "coexistence"
    DEGENERATE = "degenerate"
    NON_HYPERBOLIC_BOUNDARY = "non_hyperbolic_boundary"
    NO_STABLE_STATE = "no_stable_state"


class RegimeReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    regime: RegimeClass
    coefficients: LVCoefficients
    equilibria: EquilibriumSet
    assessments: List[AssessedEquilibrium]
    origin: OriginAnalysis
    stable_kinds: List[EquilibriumKind]

from pydantic import BaseModel
from typing import Dict, List, Optional
from enum import Enum

from models.equilibrium import EquilibriumSet
from models.parameters import LVCoefficients, SpecialCaseFlag
from models.regime import RegimeClass
from models.stability import AssessedEquilibrium, OriginAnalysis
from models.trajectory import ReductionErrorReport, TerminalReason, Tier


class VerificationStatus(str, Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    MISMATCH_KNOWN = "MISMATCH-KNOWN"


class VerificationItem(BaseModel):
    item: str
    computed: str
    published: str
    tolerance: Optional[str] = None
    status: VerificationStatus
    must_match: bool = True
    note: Optional[str] = None


class VerificationReport(BaseModel):
    items: List[VerificationItem]
    passed: bool

    @property
    def failures(self) -> List[VerificationItem]:
        return [i for i in self.items if i.must_match and i.status != VerificationStatus.MATCH]


class AnalysisReport(BaseModel):
    normalized: bool
    coefficients: LVCoefficients
    flags: List[SpecialCaseFlag]
    equilibria: EquilibriumSet
    assessments: List[AssessedEquilibrium]
    origin: OriginAnalysis
    regime: RegimeClass


class SimulationRunSummary(BaseModel):
    run: str
    tier: Tier
    terminal_reason: TerminalReason
    final_time: float
    terminal_state: Dict[str, float]
    steps_taken: int
    steps_rejected: int
    max_conservation_drift: Optional[float] = None
    csv_file: Optional[str] = None
    error: Optional[str] = None


class SimulationSummary(BaseModel):
    normalized: bool
    runs: List[SimulationRunSummary]
    reduction_errors: Dict[str, ReductionErrorReport] = {}
    failed_runs: int = 0


class SweepRow(BaseModel):
    values: Dict[str, float]
    regime: RegimeClass
    origin_case: str
    stable_kinds: List[str]
    feasible_count: int
    axis1: Optional[List[float]] = None
    axis2: Optional[List[float]] = None
    interior: Optional[List[float]] = None
    interior_feasible: Optional[bool] = None
    degenerate: bool = False

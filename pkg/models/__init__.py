# models/__init__.py

from .parameters import (
    ModelParameters, ValidatedParameters, LVCoefficients,
    SpecialCase, SpecialCaseFlag
)
from .state import PopulationState, Exact4State, ReducedState, PhasePoint
from .equilibrium import (
    Equilibrium, EquilibriumKind, EquilibriumSet,
    InteriorOutcome, InteriorSolution, ContinuumLine
)
from .stability import (
    Jacobian2, Eigenvalue, EigenDecomposition, StabilityReport, StabilityClass,
    OriginAnalysis, OriginCase, AssessedEquilibrium
)
from .trajectory import (
    Tier, IntegratorMethod, IntegratorOptions, TerminalReason,
    Trajectory, TrajectoryStats, ReductionErrorReport
)
from .portrait import (
    Window, NullclineLabel, NullclineSegment, Nullclines,
    BranchKind, SeparatrixBranch, PhasePortrait
)
from .regime import RegimeClass, RegimeReport
from .run_config import (
    RunConfig, SimulationConfig, PortraitConfig, SweepConfig, SweepAxis,
    OutputConfig, OutputFormat, InitialCondition
)
from .report import (
    AnalysisReport, SimulationRunSummary, SimulationSummary, SweepRow,
    VerificationItem, VerificationReport, VerificationStatus
)

__all__ = [
    "ModelParameters", "ValidatedParameters", "LVCoefficients",
    "SpecialCase", "SpecialCaseFlag",
    "PopulationState", "Exact4State", "ReducedState", "PhasePoint",
    "Equilibrium", "EquilibriumKind", "EquilibriumSet",
    "InteriorOutcome", "InteriorSolution", "ContinuumLine",
    "Jacobian2", "Eigenvalue", "EigenDecomposition", "StabilityReport", "StabilityClass",
    "OriginAnalysis", "OriginCase", "AssessedEquilibrium",
    "Tier", "IntegratorMethod", "IntegratorOptions", "TerminalReason",
    "Trajectory", "TrajectoryStats", "ReductionErrorReport",
    "Window", "NullclineLabel", "NullclineSegment", "Nullclines",
    "BranchKind", "SeparatrixBranch", "PhasePortrait",
    "RegimeClass", "RegimeReport",
    "RunConfig", "SimulationConfig", "PortraitConfig", "SweepConfig", "SweepAxis",
    "OutputConfig", "OutputFormat", "InitialCondition",
    "AnalysisReport", "SimulationRunSummary", "SimulationSummary", "SweepRow",
    "VerificationItem", "VerificationReport", "VerificationStatus",
]

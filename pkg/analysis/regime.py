"""Qualitative outcome of the competition, read off the feasible stable equilibria."""

from typing import List

from analysis.coefficients import reduced_coefficients
from analysis.equilibria import find_equilibria
from analysis.stability import assess_equilibria, origin_analysis
from config import settings
from models.equilibrium import EquilibriumKind, EquilibriumSet
from models.parameters import ValidatedParameters
from models.regime import RegimeClass, RegimeReport
from models.stability import AssessedEquilibrium

_BY_STABLE_SET = {
    frozenset({EquilibriumKind.ORIGIN}): RegimeClass.EXTINCTION,
    frozenset({EquilibriumKind.AXIS1}): RegimeClass.EXCLUSION_1,
    frozenset({EquilibriumKind.AXIS2}): RegimeClass.EXCLUSION_2,
    frozenset({EquilibriumKind.AXIS1, EquilibriumKind.AXIS2}): RegimeClass.BISTABLE_EXCLUSION,
}


def regime_of(eq_set: EquilibriumSet, assessed: List[AssessedEquilibrium]) -> RegimeClass:
    if eq_set.degenerate:
        return RegimeClass.DEGENERATE

    relevant = [item for item in assessed if item.equilibrium.feasible]
    if any(not item.report.hyperbolic for item in relevant):
        return RegimeClass.NON_HYPERBOLIC_BOUNDARY

    stable = frozenset(item.equilibrium.kind for item in relevant if item.report.is_stable)
    if EquilibriumKind.INTERIOR in stable:
        return RegimeClass.COEXISTENCE
    return _BY_STABLE_SET.get(stable, RegimeClass.NO_STABLE_STATE)


def classify_regime(p: ValidatedParameters, tol: float = settings.HYPERBOLIC_TOL) -> RegimeReport:
    c = reduced_coefficients(p)
    eq_set = find_equilibria(c)
    assessed = assess_equilibria(c, eq_set, tol)
    regime = regime_of(eq_set, assessed)

    return RegimeReport(
        regime=regime,
        coefficients=c,
        equilibria=eq_set,
        assessments=assessed,
        origin=origin_analysis(p, tol),
        stable_kinds=[item.equilibrium.kind for item in assessed
                      if item.equilibrium.feasible and item.report.is_stable],
    )

"""Closed-form fixed points of the reduced system."""

import logging
from typing import List

from models.equilibrium import (
    ContinuumLine,
    Equilibrium,
    EquilibriumKind,
    EquilibriumSet,
    InteriorOutcome,
    InteriorSolution,
)
from models.parameters import LVCoefficients
from models.state import PhasePoint

logger = logging.getLogger(__name__)

DET_EPS = 1e-12
DEDUP_REL = 1e-9

_KIND_PRECEDENCE = {
    EquilibriumKind.ORIGIN: 0,
    EquilibriumKind.AXIS1: 1,
    EquilibriumKind.AXIS2: 1,
    EquilibriumKind.INTERIOR: 2,
}


def make_equilibrium(kind: EquilibriumKind, d1: float, d2: float, n_total: float) -> Equilibrium:
    return Equilibrium(
        kind=kind,
        location=PhasePoint(d1=d1, d2=d2),
        nonnegative=d1 >= 0.0 and d2 >= 0.0,
        within_population=d1 + d2 <= n_total,
    )


def origin_equilibrium(c: LVCoefficients) -> Equilibrium:
    return make_equilibrium(EquilibriumKind.ORIGIN, 0.0, 0.0, c.n_total)


def axis_equilibria(c: LVCoefficients) -> List[Equilibrium]:
    """Single-drug fixed points; a drug with a_ii = 0 (beta_i = 0) has none."""
    points = []
    if c.a11 > 0.0:
        points.append(make_equilibrium(EquilibriumKind.AXIS1, c.r1 * c.n_total / c.a11, 0.0, c.n_total))
    if c.a22 > 0.0:
        points.append(make_equilibrium(EquilibriumKind.AXIS2, 0.0, c.r2 * c.n_total / c.a22, c.n_total))
    return points


def interior_equilibrium(c: LVCoefficients) -> InteriorSolution:
    """Solve a11 D1 + a12 D2 = r1 N, a21 D1 + a22 D2 = r2 N by elimination."""
    n = c.n_total
    b1 = c.r1 * n
    b2 = c.r2 * n
    diag = c.a11 * c.a22
    cross = c.a12 * c.a21
    det = diag - cross
    scale = max(abs(diag), abs(cross))

    if abs(det) > DET_EPS * scale:
        d1 = (b1 * c.a22 - c.a12 * b2) / det
        d2 = (c.a11 * b2 - c.a21 * b1) / det
        return InteriorSolution(
            outcome=InteriorOutcome.UNIQUE,
            equilibrium=make_equilibrium(EquilibriumKind.INTERIOR, d1, d2, n),
            determinant=det,
        )

    if c.a11 == c.a12 == c.a21 == c.a22 == 0.0:
        # every point is an equilibrium when r = 0, none otherwise
        if b1 == 0.0 and b2 == 0.0:
            return InteriorSolution(outcome=InteriorOutcome.CONTINUUM, determinant=det)
        return InteriorSolution(outcome=InteriorOutcome.NONE, determinant=det)

    if _consistent(c.a11, c.a21, b1, b2) and _consistent(c.a12, c.a22, b1, b2):
        return InteriorSolution(outcome=InteriorOutcome.CONTINUUM, line=_continuum_line(c), determinant=det)
    return InteriorSolution(outcome=InteriorOutcome.NONE, determinant=det)


def _consistent(col_1: float, col_2: float, b1: float, b2: float) -> bool:
    # singular A: [A | b] has the same rank iff every column is parallel to b
    left = col_1 * b2
    right = col_2 * b1
    return abs(left - right) <= DET_EPS * max(abs(left), abs(right))


def _continuum_line(c: LVCoefficients) -> ContinuumLine:
    # the row with the larger norm carries the line
    first = c.a11 ** 2 + c.a12 ** 2
    second = c.a21 ** 2 + c.a22 ** 2
    if first >= second:
        return ContinuumLine(coef_d1=c.a11, coef_d2=c.a12, rhs=c.r1 * c.n_total)
    return ContinuumLine(coef_d1=c.a21, coef_d2=c.a22, rhs=c.r2 * c.n_total)


def _coincide(a: Equilibrium, b: Equilibrium, n_total: float) -> bool:
    tol = DEDUP_REL * n_total
    return (abs(a.location.d1 - b.location.d1) <= tol
            and abs(a.location.d2 - b.location.d2) <= tol)


def find_equilibria(c: LVCoefficients) -> EquilibriumSet:
    candidates = [origin_equilibrium(c)] + axis_equilibria(c)
    interior = interior_equilibrium(c)
    outcome = interior.outcome
    if interior.equilibrium is not None:
        candidates.append(interior.equilibrium)

    # stable sort keeps the origin < axis1 < axis2 < interior order
    candidates.sort(key=lambda e: _KIND_PRECEDENCE[e.kind])
    points: List[Equilibrium] = []
    for candidate in candidates:
        if any(_coincide(candidate, kept, c.n_total) for kept in points):
            logger.debug("dropping %s at (%g, %g): coincides with a kept point",
                         candidate.kind.value, candidate.location.d1, candidate.location.d2)
            if candidate.kind == EquilibriumKind.INTERIOR:
                outcome = InteriorOutcome.COINCIDENT
            continue
        points.append(candidate)

    return EquilibriumSet(
        points=points,
        degenerate=outcome == InteriorOutcome.CONTINUUM,
        continuum=interior.line,
        interior_outcome=outcome,
        determinant=interior.determinant,
    )

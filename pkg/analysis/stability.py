"""Jacobian of the reduced system, closed-form 2x2 eigen analysis, classification."""

import math
from typing import List, Tuple

from analysis.coefficients import theta
from config import settings
from models.equilibrium import EquilibriumSet
from models.parameters import LVCoefficients, ValidatedParameters
from models.stability import (
    AssessedEquilibrium,
    EigenDecomposition,
    Eigenvalue,
    Jacobian2,
    OriginAnalysis,
    OriginCase,
    StabilityClass,
    StabilityReport,
)
from analysis.rhs import StateLike, as_vector

REPEATED_REL = 1e-12


def jacobian_at(c: LVCoefficients, d: StateLike) -> Jacobian2:
    d1, d2 = as_vector(d)
    n = c.n_total
    return Jacobian2(
        j11=c.r1 - (2.0 * c.a11 * d1 + c.a12 * d2) / n,
        j12=-c.a12 * d1 / n,
        j21=-c.a21 * d2 / n,
        j22=c.r2 - (c.a21 * d1 + 2.0 * c.a22 * d2) / n,
    )


def eigen2(j: Jacobian2) -> EigenDecomposition:
    """Roots of l^2 - tr l + det = 0.

    Triangular matrices return their diagonal exactly, in (j11, j22) order.
    Otherwise the larger-magnitude real root comes first and the second is
    det / l1, which avoids cancellation in the quadratic formula.
    """
    tr = j.trace
    det = j.determinant

    if j.j12 == 0.0 or j.j21 == 0.0:
        l1, l2 = j.j11, j.j22
        return EigenDecomposition(
            eigenvalues=(Eigenvalue(real=l1), Eigenvalue(real=l2)),
            eigenvectors=_real_eigenvectors(j, l1, l2),
        )

    disc = tr * tr - 4.0 * det
    if disc < 0.0:
        half_width = 0.5 * math.sqrt(-disc)
        return EigenDecomposition(
            eigenvalues=(Eigenvalue(real=0.5 * tr, imag=half_width),
                         Eigenvalue(real=0.5 * tr, imag=-half_width)),
        )

    q = 0.5 * (tr + math.copysign(math.sqrt(disc), tr))
    if q == 0.0:
        l1 = l2 = 0.0
    else:
        l1, l2 = q, det / q
    return EigenDecomposition(
        eigenvalues=(Eigenvalue(real=l1), Eigenvalue(real=l2)),
        eigenvectors=_real_eigenvectors(j, l1, l2),
    )


def _real_eigenvectors(j: Jacobian2, l1: float, l2: float) -> List[Tuple[float, float]]:
    scale = max(abs(l1), abs(l2), 1e-300)
    if abs(l1 - l2) <= REPEATED_REL * scale:
        if j.j12 == 0.0 and j.j21 == 0.0:
            return [(1.0, 0.0), (0.0, 1.0)]
        return [_null_vector(j, l1)]
    return [_null_vector(j, l1), _null_vector(j, l2)]


def _null_vector(j: Jacobian2, lam: float) -> Tuple[float, float]:
    # each row of (J - lam I) gives an orthogonal candidate; keep the better conditioned
    first = (j.j12, lam - j.j11)
    second = (lam - j.j22, j.j21)
    vx, vy = first if math.hypot(*first) >= math.hypot(*second) else second
    norm = math.hypot(vx, vy)
    if norm == 0.0:
        return (1.0, 0.0)
    vx, vy = vx / norm, vy / norm
    if vx < 0.0 or (vx == 0.0 and vy < 0.0):
        vx, vy = -vx, -vy
    return (vx + 0.0, vy + 0.0)  # no negative zeros in reports


def classify(j: Jacobian2, tol: float = settings.HYPERBOLIC_TOL) -> StabilityReport:
    eig = eigen2(j)
    l1, l2 = eig.eigenvalues
    det = j.determinant
    complex_pair = l1.imag != 0.0

    if complex_pair and abs(l1.real) <= tol and abs(l1.imag) > tol:
        stability = StabilityClass.CENTER
    elif abs(l1.real) <= tol or abs(l2.real) <= tol or abs(det) <= tol * tol:
        stability = StabilityClass.NON_HYPERBOLIC
    elif det < 0.0:
        stability = StabilityClass.SADDLE
    elif complex_pair:
        stability = StabilityClass.STABLE_SPIRAL if l1.real < 0.0 else StabilityClass.UNSTABLE_SPIRAL
    else:
        stability = StabilityClass.STABLE_NODE if l1.real < 0.0 else StabilityClass.UNSTABLE_NODE

    hyperbolic = stability not in (StabilityClass.CENTER, StabilityClass.NON_HYPERBOLIC)
    return StabilityReport(
        eigenvalues=eig.eigenvalues,
        eigenvectors=eig.eigenvectors,
        stability=stability,
        hyperbolic=hyperbolic,
    )


def origin_analysis(p: ValidatedParameters, tol: float = settings.HYPERBOLIC_TOL) -> OriginAnalysis:
    theta1 = theta(p, 1)
    theta2 = theta(p, 2)
    gaps = (theta1 - p.mu, theta2 - p.mu)

    if any(abs(g) <= tol for g in gaps):
        case = OriginCase.BOUNDARY
    elif all(g < 0.0 for g in gaps):
        case = OriginCase.BOTH_BELOW_MU
    elif all(g > 0.0 for g in gaps):
        case = OriginCase.BOTH_ABOVE_MU
    else:
        case = OriginCase.MIXED

    return OriginAnalysis(theta1=theta1, theta2=theta2, mu=p.mu, case=case)


def assess_equilibria(
    c: LVCoefficients, eq_set: EquilibriumSet, tol: float = settings.HYPERBOLIC_TOL
) -> List[AssessedEquilibrium]:
    assessed = []
    for point in eq_set.points:
        jac = jacobian_at(c, point.location)
        assessed.append(AssessedEquilibrium(equilibrium=point, jacobian=jac, report=classify(jac, tol)))
    return assessed

"""Right-hand sides of the three model tiers and the steady-state closure.

Tiers, from most to least detailed:

* full    (S, D1, D2, R1, R2)
* exact4  (D1, D2, R1, R2), S = N - D1 - D2 - R1 - R2 substituted
* reduced (D1, D2), R_i replaced by gamma_i D_i / (delta_i + mu)

States are never clamped here; all functions accept typed states or plain
arrays (first axis = components, so (k, n) batches evaluate column-wise).
"""

from typing import Tuple, Union

import numpy as np

from models.parameters import LVCoefficients, ValidatedParameters
from models.state import Exact4State, PhasePoint, PopulationState, ReducedState
from utils.errors import SingularClosure

StateLike = Union[PopulationState, Exact4State, ReducedState, PhasePoint, np.ndarray, tuple, list]


def as_vector(x: StateLike) -> np.ndarray:
    if hasattr(x, "as_array"):
        return x.as_array()
    return np.asarray(x, dtype=float)


def full_rhs(p: ValidatedParameters, x: StateLike) -> np.ndarray:
    s, d1, d2, r1, r2 = as_vector(x)
    n = p.n_total

    influence1 = p.beta1 * s * d1 / n
    influence2 = p.beta2 * s * d2 / n
    net_switch = (p.alpha1 - p.alpha2) * d1 * d2 / n

    return np.array([
        p.mu * n - p.mu * s - influence1 - influence2,
        influence1 + p.delta1 * r1 + net_switch - p.gamma1 * d1 - p.mu * d1,
        influence2 + p.delta2 * r2 - net_switch - p.gamma2 * d2 - p.mu * d2,
        p.gamma1 * d1 - p.delta1 * r1 - p.mu * r1,
        p.gamma2 * d2 - p.delta2 * r2 - p.mu * r2,
    ])


def exact4_rhs(p: ValidatedParameters, x: StateLike) -> np.ndarray:
    d1, d2, r1, r2 = as_vector(x)
    n = p.n_total
    recovered = r1 + r2

    return np.array([
        (p.beta1 - p.gamma1 - p.mu) * d1 + p.delta1 * r1
        - d1 / n * (p.beta1 * d1 + (p.alpha2 - p.alpha1 + p.beta1) * d2 + p.beta1 * recovered),
        (p.beta2 - p.gamma2 - p.mu) * d2 + p.delta2 * r2
        - d2 / n * ((p.alpha1 - p.alpha2 + p.beta2) * d1 + p.beta2 * d2 + p.beta2 * recovered),
        p.gamma1 * d1 - (p.delta1 + p.mu) * r1,
        p.gamma2 * d2 - (p.delta2 + p.mu) * r2,
    ])


def qss_recovered(p: ValidatedParameters, d: StateLike) -> Tuple[float, float]:
    d1, d2 = as_vector(d)
    for i in (1, 2):
        if p.delta(i) + p.mu == 0.0:
            raise SingularClosure(f"delta{i} + mu = 0", field=f"delta{i}")
    return (p.gamma1 * d1 / (p.delta1 + p.mu), p.gamma2 * d2 / (p.delta2 + p.mu))


def reduced_rhs(c: LVCoefficients, d: StateLike) -> np.ndarray:
    d1, d2 = as_vector(d)
    n = c.n_total
    return np.array([
        c.r1 * d1 - d1 / n * (c.a11 * d1 + c.a12 * d2),
        c.r2 * d2 - d2 / n * (c.a21 * d1 + c.a22 * d2),
    ])


def lift_to_exact4(p: ValidatedParameters, d: StateLike) -> np.ndarray:
    d1, d2 = as_vector(d)
    r1, r2 = qss_recovered(p, (d1, d2))
    return np.array([d1, d2, r1, r2])


def lift_to_full(p: ValidatedParameters, d: StateLike) -> np.ndarray:
    d1, d2, r1, r2 = lift_to_exact4(p, d)
    return np.array([p.n_total - d1 - d2 - r1 - r2, d1, d2, r1, r2])

"""Parameter validation and the reduced-system (competitive Lotka-Volterra) coefficients.

The linear growth rate of drug i after eliminating R_i through its steady-state
closure R_i = gamma_i D_i / (delta_i + mu) is

    r_i = beta_i - gamma_i - mu + delta_i gamma_i / (delta_i + mu)

(the relapse inflow delta_i R_i adds back delta_i gamma_i / (delta_i + mu)).
This is the form that reproduces the simulation-study numbers 0.19 / 0.39 and
theta = 0.29 / 0.49; the variant with -delta_i gamma_i / (delta_i + mu) does not.
"""

import logging
import math
from typing import List

from models.parameters import (
    LVCoefficients,
    ModelParameters,
    SpecialCase,
    SpecialCaseFlag,
    ValidatedParameters,
)
from utils.errors import (
    NonPositivePopulation,
    ParameterValidationError,
    RateOutOfRange,
    SingularClosure,
)

logger = logging.getLogger(__name__)


def validate_parameters(raw: ModelParameters) -> ValidatedParameters:
    errors: List[ParameterValidationError] = []

    for name in ModelParameters.RATE_FIELDS:
        value = getattr(raw, name)
        if not math.isfinite(value) or value < 0.0 or value > 1.0:
            errors.append(RateOutOfRange(f"{name}={value!r} is outside [0, 1]", field=name))

    if not math.isfinite(raw.n_total) or raw.n_total <= 0.0:
        errors.append(NonPositivePopulation(f"N={raw.n_total!r} must be positive", field="N"))

    for i in (1, 2):
        if raw.delta(i) + raw.mu == 0.0:
            errors.append(SingularClosure(
                f"delta{i} + mu = 0: the steady-state closure for R{i} is undefined",
                field=f"delta{i}",
            ))

    if errors:
        first = errors[0]
        first.errors = errors
        raise first

    flags = _special_cases(raw)
    for flag in flags:
        logger.debug("special case %s: %s", flag.case.value, flag.detail)

    data = raw.model_dump(include=set(ModelParameters.RATE_FIELDS) | {"n_total"})
    return ValidatedParameters(**data, flags=tuple(flags))


def _special_cases(p: ModelParameters) -> List[SpecialCaseFlag]:
    flags: List[SpecialCaseFlag] = []

    for name in ModelParameters.RATE_FIELDS:
        if getattr(p, name) == 0.0:
            drug = int(name[-1]) if name[-1].isdigit() else None
            flags.append(SpecialCaseFlag(
                case=SpecialCase.ZERO_RATE, drug=drug, parameter=name,
                detail=f"{name} is exactly 0",
            ))

    for i in (1, 2):
        if p.alpha(i) == 0.0:
            flags.append(SpecialCaseFlag(
                case=SpecialCase.ONE_WAY_SWITCHING, drug=i, parameter=f"alpha{i}",
                detail=f"users of the other drug never switch to drug {i}",
            ))
        if p.beta(i) == 0.0:
            flags.append(SpecialCaseFlag(
                case=SpecialCase.DRUG_ABSENT, drug=i, parameter=f"beta{i}",
                detail=f"drug {i} recruits no susceptibles; its axis equilibrium does not exist",
            ))
        if p.gamma(i) == 0.0 and p.delta(i) == 0.0:
            flags.append(SpecialCaseFlag(
                case=SpecialCase.FATAL_DISEASE, drug=i,
                detail=f"no recovery from drug {i}: R{i} stays empty once it is empty",
            ))

    return flags


def theta(p: ValidatedParameters, i: int) -> float:
    """Origin growth quantity; the origin eigenvalue of drug i is theta_i - mu."""
    return p.beta(i) - p.gamma(i) + p.delta(i) * p.gamma(i) / (p.delta(i) + p.mu)


def reduced_coefficients(p: ValidatedParameters) -> LVCoefficients:
    k1 = p.closure_factor(1)
    k2 = p.closure_factor(2)

    return LVCoefficients(
        r1=theta(p, 1) - p.mu,
        r2=theta(p, 2) - p.mu,
        a11=p.beta1 * (1.0 + k1),
        a12=p.beta1 * (1.0 + k2) + p.alpha2 - p.alpha1,
        a21=p.beta2 * (1.0 + k1) + p.alpha1 - p.alpha2,
        a22=p.beta2 * (1.0 + k2),
        n_total=p.n_total,
    )

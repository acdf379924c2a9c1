"""Explicit Runge-Kutta integration of the model tiers.

Two steppers share one driver loop:

* classical fixed-step RK4
* Cash-Karp 5(4) embedded pair, 5th order propagated, with per-step error
  control ``|err| <= abs_tol + rel_tol * |y|``; rejected steps are halved and
  accepted steps grow by at most ``max_growth``.

Undershoots below zero within eps_pos = 1e-9 N are clamped to 0; anything
further below zero is a step failure (rejected and retried by the adaptive
stepper, fatal for the fixed one).
"""

import logging
from typing import Callable, Optional, Tuple, Union

import numpy as np

from analysis.coefficients import reduced_coefficients
from analysis.rhs import StateLike, as_vector, exact4_rhs, full_rhs, qss_recovered, reduced_rhs
from models.parameters import LVCoefficients, ValidatedParameters
from models.state import Exact4State
from models.trajectory import (
    IntegratorMethod,
    IntegratorOptions,
    ReductionErrorReport,
    TerminalReason,
    Tier,
    Trajectory,
    TrajectoryStats,
)
from utils.errors import InvalidInitialState, StepFailure

logger = logging.getLogger(__name__)

POSITIVITY_REL = 1e-9
MANIFOLD_REL = 1e-9

# Cash-Karp tableau
CK_NODES = np.array([0.0, 1 / 5, 3 / 10, 3 / 5, 1.0, 7 / 8])
CK_STAGES = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (3 / 10, -9 / 10, 6 / 5),
    (-11 / 54, 5 / 2, -70 / 27, 35 / 27),
    (1631 / 55296, 175 / 512, 575 / 13824, 44275 / 110592, 253 / 4096),
)
CK_WEIGHTS = np.array([37 / 378, 0.0, 250 / 621, 125 / 594, 0.0, 512 / 1771])
# 5th minus embedded 4th order weights
CK_ERROR = np.array([-277 / 64512, 0.0, 6925 / 370944, -6925 / 202752, -277 / 14336, 277 / 7084])

# D1, D2 column indices per tier, for window bounds
_PLANE_COLUMNS = {Tier.FULL: (1, 2), Tier.EXACT4: (0, 1), Tier.REDUCED: (0, 1)}

System = Union[ValidatedParameters, LVCoefficients]
Rhs = Callable[[np.ndarray], np.ndarray]


def _tier_rhs(tier: Tier, system: System) -> Tuple[Rhs, float]:
    if tier == Tier.REDUCED:
        coeffs = system if isinstance(system, LVCoefficients) else reduced_coefficients(system)
        return (lambda y: reduced_rhs(coeffs, y)), coeffs.n_total
    if not isinstance(system, ValidatedParameters):
        raise InvalidInitialState(f"the {tier.value} tier needs model parameters, not reduced coefficients")
    if tier == Tier.FULL:
        return (lambda y: full_rhs(system, y)), system.n_total
    return (lambda y: exact4_rhs(system, y)), system.n_total


def _check_initial_state(tier: Tier, y0: np.ndarray, n_total: float) -> None:
    expected = {Tier.FULL: 5, Tier.EXACT4: 4, Tier.REDUCED: 2}[tier]
    if y0.shape != (expected,):
        raise InvalidInitialState(f"{tier.value} tier expects {expected} components, got shape {y0.shape}")
    if not np.all(np.isfinite(y0)) or np.any(y0 < 0.0):
        raise InvalidInitialState(f"initial state {y0.tolist()} has negative or non-finite components")
    if tier == Tier.FULL and abs(y0.sum() - n_total) > MANIFOLD_REL * n_total:
        raise InvalidInitialState(f"compartments sum to {y0.sum()!r}, expected N={n_total!r}")
    if tier == Tier.EXACT4 and y0.sum() > n_total * (1.0 + MANIFOLD_REL):
        raise InvalidInitialState(f"D1+D2+R1+R2={y0.sum()!r} exceeds N={n_total!r}")


def _rk4_step(f: Rhs, y: np.ndarray, h: float, k1: np.ndarray) -> np.ndarray:
    k2 = f(y + 0.5 * h * k1)
    k3 = f(y + 0.5 * h * k2)
    k4 = f(y + h * k3)
    return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _cash_karp_step(f: Rhs, y: np.ndarray, h: float, k1: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    ks = [k1]
    for row in CK_STAGES[1:]:
        increment = sum(a * k for a, k in zip(row, ks))
        ks.append(f(y + h * increment))
    stacked = np.array(ks)
    return y + h * (CK_WEIGHTS @ stacked), h * (CK_ERROR @ stacked)


def _outside(y: np.ndarray, tier: Tier, bounds) -> bool:
    if bounds is None:
        return False
    i, j = _PLANE_COLUMNS[tier]
    d1_min, d1_max, d2_min, d2_max = bounds
    return not (d1_min <= y[i] <= d1_max and d2_min <= y[j] <= d2_max)


def integrate(
    tier: Tier,
    system: System,
    x0: StateLike,
    opts: Optional[IntegratorOptions] = None,
) -> Trajectory:
    """Integrate one tier from ``x0``.

    Raises StepFailure (with the partial trajectory attached as
    ``.trajectory``) when a step cannot be completed.
    """
    opts = opts or IntegratorOptions()
    rhs, n_total = _tier_rhs(tier, system)
    y = as_vector(x0).astype(float)
    _check_initial_state(tier, y, n_total)

    direction = float(opts.direction)
    f = rhs if opts.direction == 1 else (lambda v: direction * rhs(v))

    abs_tol = opts.abs_tol if opts.abs_tol is not None else 1e-8 * n_total
    stop_tol = opts.equilibrium_stop_tol if opts.equilibrium_stop_tol is not None else 1e-7 * n_total
    eps_pos = POSITIVITY_REL * n_total

    stats = TrajectoryStats()
    times = [0.0]
    states = [y.copy()]
    t = 0.0
    k1 = f(y)
    stats.rhs_evaluations += 1

    reason = TerminalReason.REACHED_T_MAX
    message = None

    def converged(slope: np.ndarray) -> bool:
        return stop_tol > 0.0 and float(np.max(np.abs(slope))) * opts.characteristic_time < stop_tol

    if converged(k1):
        reason = TerminalReason.CONVERGED
    else:
        h = opts.step if opts.method == IntegratorMethod.FIXED_RK4 else min(opts.initial_step, opts.t_max)
        n_fixed = 0
        while t < opts.t_max:
            if stats.steps_taken + stats.steps_rejected >= opts.max_steps:
                reason = TerminalReason.STEP_FAILURE
                message = f"max_steps={opts.max_steps} reached at t={t:.6g}"
                break

            if opts.method == IntegratorMethod.FIXED_RK4:
                t_next = min((n_fixed + 1) * opts.step, opts.t_max)
                if opts.t_max - t_next < 1e-9 * opts.step:
                    t_next = opts.t_max
                y_new = _rk4_step(f, y, t_next - t, k1)
                stats.rhs_evaluations += 3
                if np.any(y_new < -eps_pos) or not np.all(np.isfinite(y_new)):
                    reason = TerminalReason.STEP_FAILURE
                    message = f"positivity violated at t={t_next:.6g}: {y_new.tolist()}"
                    break
                n_fixed += 1
            else:
                h = min(h, opts.t_max - t)
                y_new, err = _cash_karp_step(f, y, h, k1)
                stats.rhs_evaluations += 5
                scale = abs_tol + opts.rel_tol * np.maximum(np.abs(y), np.abs(y_new))
                ratio = float(np.max(np.abs(err) / scale))
                if not np.isfinite(ratio) or ratio > 1.0 or np.any(y_new < -eps_pos):
                    stats.steps_rejected += 1
                    h *= 0.5
                    if h < opts.min_step:
                        reason = TerminalReason.STEP_FAILURE
                        message = f"step size fell below min_step={opts.min_step:g} at t={t:.6g}"
                        break
                    continue
                t_next = opts.t_max if opts.t_max - (t + h) <= 1e-12 * opts.t_max else t + h
                growth = opts.max_growth if ratio == 0.0 else 0.9 * ratio ** -0.2
                h *= min(opts.max_growth, max(0.2, growth))

            y = np.where(y_new < 0.0, 0.0, y_new)
            t = t_next
            stats.steps_taken += 1
            times.append(t)
            states.append(y.copy())

            k1 = f(y)
            stats.rhs_evaluations += 1
            if _outside(y, tier, opts.bounds):
                reason = TerminalReason.LEFT_WINDOW
                break
            if converged(k1):
                reason = TerminalReason.CONVERGED
                break

    traj_times = np.array(times)
    traj_states = np.array(states)
    if opts.output_step is not None and len(traj_times) > 1:
        t_end = traj_times[-1]
        grid = opts.output_step * np.arange(int(np.floor(t_end / opts.output_step)) + 1)
        if t_end - grid[-1] > 1e-9 * opts.output_step:
            grid = np.append(grid, t_end)
        else:
            grid[-1] = t_end
        resampled = np.column_stack([np.interp(grid, traj_times, traj_states[:, k])
                                     for k in range(traj_states.shape[1])])
        resampled[-1] = traj_states[-1]
        traj_times, traj_states = grid, resampled

    trajectory = Trajectory(
        tier=tier,
        method=opts.method,
        direction=opts.direction,
        times=traj_times,
        states=traj_states,
        terminal_reason=reason,
        stats=stats,
        message=message,
    )

    if reason == TerminalReason.STEP_FAILURE:
        logger.warning("integration of %s tier failed: %s", tier.value, message)
        failure = StepFailure(message)
        failure.trajectory = trajectory
        raise failure

    logger.debug("%s tier: %s at t=%.6g after %d steps (%d rejected)", tier.value, reason.value,
                 t, stats.steps_taken, stats.steps_rejected)
    return trajectory


def reduction_error(
    p: ValidatedParameters,
    x0: Union[Exact4State, StateLike],
    opts: Optional[IntegratorOptions] = None,
    samples: int = 2001,
) -> ReductionErrorReport:
    """Cost of replacing R_i by its steady-state closure.

    Integrates the exact 4D tier from ``x0`` and the reduced tier from its
    (D1, D2), then compares both on a common uniform grid.
    """
    y0 = as_vector(x0).astype(float)
    exact = integrate(Tier.EXACT4, p, y0, opts)
    reduced = integrate(Tier.REDUCED, p, y0[:2], opts)

    t_end = max(exact.final_time, reduced.final_time)
    grid = np.linspace(0.0, t_end, samples)
    exact_on_grid = exact.resampled(grid)
    reduced_on_grid = reduced.resampled(grid)

    d_gap = np.abs(exact_on_grid[:, :2] - reduced_on_grid)
    closure = np.column_stack(qss_recovered(p, exact_on_grid[:, :2].T))
    qss_gap = np.abs(exact_on_grid[:, 2:] - closure)

    return ReductionErrorReport(
        sup_d_difference=float(d_gap.max()),
        terminal_d_difference=float(np.max(np.abs(exact.final_state[:2] - reduced.final_state))),
        sup_qss_deviation=float(qss_gap.max()),
        exact4_terminal=tuple(float(v) for v in exact.final_state),
        reduced_terminal=tuple(float(v) for v in reduced.final_state),
        exact4_reason=exact.terminal_reason,
        reduced_reason=reduced.terminal_reason,
        samples=samples,
    )

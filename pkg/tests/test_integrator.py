import numpy as np
import pytest
from scipy.integrate import solve_ivp

from analysis.integrator import integrate, reduction_error
from analysis.rhs import lift_to_exact4, reduced_rhs
from models.state import Exact4State
from models.trajectory import IntegratorMethod, IntegratorOptions, TerminalReason, Tier
from utils.errors import InvalidInitialState, StepFailure

from tests.conftest import AXIS2, N


def _fixed(step, t_max, **kwargs):
    return IntegratorOptions(method=IntegratorMethod.FIXED_RK4, step=step, t_max=t_max,
                             equilibrium_stop_tol=0.0, **kwargs)


def test_start_on_equilibrium_stops_immediately(study_params):
    traj = integrate(Tier.REDUCED, study_params, AXIS2)
    assert traj.terminal_reason == TerminalReason.CONVERGED
    assert traj.times.tolist() == [0.0]
    assert traj.stats.steps_taken == 0


def test_interior_start_converges_to_the_d2_axis(study_params):
    traj = integrate(Tier.REDUCED, study_params, (100.0, 100.0), IntegratorOptions(t_max=400.0))
    assert traj.terminal_reason == TerminalReason.CONVERGED
    assert traj.final_state == pytest.approx(AXIS2, abs=0.01)
    assert np.all(np.diff(traj.times) > 0.0)


def test_full_tier_stays_on_the_population_manifold(study_params):
    traj = integrate(Tier.FULL, study_params, (9800.0, 100.0, 100.0, 0.0, 0.0),
                     IntegratorOptions(t_max=100.0))
    assert traj.columns == ("S", "D1", "D2", "R1", "R2")
    assert np.max(np.abs(traj.states.sum(axis=1) - N)) < 1e-6 * N


def test_fixed_rk4_is_fourth_order(study_coeffs):
    x0 = (1000.0, 1000.0)
    reference = integrate(Tier.REDUCED, study_coeffs, x0, _fixed(1e-4, 10.0)).final_state
    coarse = integrate(Tier.REDUCED, study_coeffs, x0, _fixed(0.01, 10.0)).final_state
    fine = integrate(Tier.REDUCED, study_coeffs, x0, _fixed(0.005, 10.0)).final_state
    ratio = np.max(np.abs(coarse - reference)) / np.max(np.abs(fine - reference))
    assert 12.0 < ratio < 20.0


def test_adaptive_stepper_matches_scipy(study_coeffs):
    x0 = (1000.0, 1000.0)
    opts = IntegratorOptions(t_max=50.0, rel_tol=1e-10, abs_tol=1e-6, equilibrium_stop_tol=0.0)
    ours = integrate(Tier.REDUCED, study_coeffs, x0, opts)
    oracle = solve_ivp(lambda t, y: reduced_rhs(study_coeffs, y), (0.0, 50.0), x0,
                       method="DOP853", rtol=1e-12, atol=1e-9)
    assert ours.final_time == 50.0
    assert ours.final_state == pytest.approx(oracle.y[:, -1], rel=1e-6)


def test_integration_is_deterministic(study_params):
    opts = IntegratorOptions(t_max=60.0)
    first = integrate(Tier.EXACT4, study_params, (100.0, 100.0, 0.0, 0.0), opts)
    second = integrate(Tier.EXACT4, study_params, (100.0, 100.0, 0.0, 0.0), opts)
    assert np.array_equal(first.times, second.times)
    assert np.array_equal(first.states, second.states)


def test_step_size_collapse_raises_with_partial_trajectory(study_coeffs):
    opts = IntegratorOptions(initial_step=10.0, min_step=1.0, rel_tol=1e-14, abs_tol=1e-12)
    with pytest.raises(StepFailure) as exc:
        integrate(Tier.REDUCED, study_coeffs, (1000.0, 1000.0), opts)
    traj = exc.value.trajectory
    assert traj.terminal_reason == TerminalReason.STEP_FAILURE
    assert traj.times.tolist() == [0.0]
    assert traj.stats.steps_rejected > 0


def test_step_budget_is_enforced(study_coeffs):
    with pytest.raises(StepFailure, match="max_steps") as exc:
        integrate(Tier.REDUCED, study_coeffs, (1000.0, 1000.0), _fixed(0.01, 10.0, max_steps=5))
    assert len(exc.value.trajectory.times) == 6


@pytest.mark.parametrize("tier, x0", [
    (Tier.REDUCED, (-1.0, 10.0)),
    (Tier.REDUCED, (1.0, 2.0, 3.0)),
    (Tier.REDUCED, (float("nan"), 1.0)),
    (Tier.FULL, (9000.0, 100.0, 100.0, 0.0, 0.0)),
    (Tier.EXACT4, (6000.0, 6000.0, 0.0, 0.0)),
])
def test_invalid_initial_states(study_params, tier, x0):
    with pytest.raises(InvalidInitialState):
        integrate(tier, study_params, x0)


def test_full_tier_needs_model_parameters(study_coeffs):
    with pytest.raises(InvalidInitialState):
        integrate(Tier.FULL, study_coeffs, (9800.0, 100.0, 100.0, 0.0, 0.0))


def test_leaving_the_window_stops_integration(study_coeffs):
    opts = IntegratorOptions(t_max=400.0, bounds=(0.0, 2000.0, 0.0, 2000.0))
    traj = integrate(Tier.REDUCED, study_coeffs, (100.0, 100.0), opts)
    assert traj.terminal_reason == TerminalReason.LEFT_WINDOW
    assert traj.final_state[1] > 2000.0


def test_backward_integration_retraces_forward(study_coeffs):
    backward = integrate(Tier.REDUCED, study_coeffs, (100.0, 100.0),
                         IntegratorOptions(t_max=1.0, direction=-1, rel_tol=1e-12, abs_tol=1e-9))
    assert np.all(backward.final_state < 100.0)
    forward = integrate(Tier.REDUCED, study_coeffs, backward.final_state,
                        IntegratorOptions(t_max=1.0, rel_tol=1e-12, abs_tol=1e-9))
    assert forward.final_state == pytest.approx([100.0, 100.0], rel=1e-7)


def test_output_step_resamples_onto_a_uniform_grid(study_coeffs):
    raw = integrate(Tier.REDUCED, study_coeffs, (100.0, 100.0), _fixed(0.01, 10.0))
    sampled = integrate(Tier.REDUCED, study_coeffs, (100.0, 100.0), _fixed(0.01, 10.0, output_step=0.5))
    assert sampled.times == pytest.approx(np.linspace(0.0, 10.0, 21))
    assert np.array_equal(sampled.final_state, raw.final_state)


def test_slow_approach_to_the_stable_node(study_coeffs):
    traj = integrate(Tier.REDUCED, study_coeffs, (50.0, 7140.909), IntegratorOptions(t_max=400.0))
    assert traj.terminal_reason == TerminalReason.CONVERGED
    assert np.all(np.diff(traj.states[:, 0]) < 0.0)
    assert np.all((traj.states[:, 1] > 7000.0) & (traj.states[:, 1] <= 7140.909))


def test_trajectories_stay_nonnegative(draw_parameters):
    rng = np.random.default_rng(51)
    opts = IntegratorOptions(t_max=50.0, bounds=(0.0, 10 * N, 0.0, 10 * N))
    for _ in range(50):
        p = draw_parameters(rng)
        x0 = rng.uniform(0.0, N / 2, size=2)
        traj = integrate(Tier.REDUCED, p, x0, opts)
        assert traj.states.min() >= 0.0


def test_reduction_error_vanishes_without_recovery(fatal_params):
    report = reduction_error(fatal_params, Exact4State(d1=100.0, d2=100.0, r1=0.0, r2=0.0),
                             IntegratorOptions(t_max=50.0))
    assert report.sup_qss_deviation == 0.0
    assert report.sup_d_difference < 1e-6 * N
    assert report.samples == 2001


def test_reduction_error_on_simulation_study(study_params):
    x0 = lift_to_exact4(study_params, (100.0, 100.0))
    report = reduction_error(study_params, x0, IntegratorOptions(t_max=400.0))
    assert report.exact4_reason == TerminalReason.CONVERGED
    assert report.reduced_reason == TerminalReason.CONVERGED
    assert report.sup_qss_deviation > 0.0
    assert report.terminal_d_difference < 1.0
    assert report.reduced_terminal == pytest.approx(AXIS2, abs=0.01)


def test_reduction_error_from_zero_recovered(study_params):
    report = reduction_error(study_params, Exact4State(d1=100.0, d2=100.0, r1=0.0, r2=0.0),
                             IntegratorOptions(t_max=400.0))
    assert report.exact4_reason == TerminalReason.CONVERGED
    assert report.reduced_reason == TerminalReason.CONVERGED
    assert report.sup_d_difference > 1.0
    assert report.sup_qss_deviation > 0.0
    assert report.terminal_d_difference < 1.0


def test_reduction_error_at_a_closure_consistent_equilibrium(study_params):
    report = reduction_error(study_params, lift_to_exact4(study_params, AXIS2),
                             IntegratorOptions(t_max=400.0))
    assert report.sup_d_difference < 1e-6 * N
    assert report.terminal_d_difference < 1e-6 * N
    assert report.sup_qss_deviation < 1e-6 * N

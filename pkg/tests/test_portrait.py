import re

import numpy as np
import pytest

from analysis.coefficients import reduced_coefficients, validate_parameters
from analysis.equilibria import find_equilibria
from analysis.portrait import (
    build_portrait,
    clip_line,
    grid_points,
    nullclines,
    separatrices,
    trajectory_bundle,
)
from analysis.stability import assess_equilibria
from models.equilibrium import EquilibriumKind
from models.parameters import LVCoefficients
from models.portrait import BranchKind, NullclineLabel, Window
from models.trajectory import IntegratorOptions, TerminalReason
from utils.errors import ConfigError, EmptyWindow, NotASaddle
from utils.fixtures import simulation_study_parameters
from utils.svg_renderer import render_svg

from tests.conftest import AXIS2, N

PORTRAIT_OPTS = IntegratorOptions(t_max=500.0)


def _assessed(c, kind):
    return next(a for a in assess_equilibria(c, find_equilibria(c)) if a.equilibrium.kind == kind)


def test_nullcline_intercepts(study_coeffs):
    lines = {s.label: s for s in nullclines(study_coeffs, Window.square(N)).segments}
    assert set(lines) == set(NullclineLabel)
    for label, expected in (
        (NullclineLabel.D1_INTERIOR, [(0.0, 1900 / 0.43), (1900 / 0.33, 0.0)]),
        (NullclineLabel.D2_INTERIOR, [(0.0, 3900 / 0.55), (3900 / 0.45, 0.0)]),
    ):
        ends = sorted([lines[label].start, lines[label].end])
        for end, point in zip(ends, expected):
            assert end == pytest.approx(point)
    assert sorted([lines[NullclineLabel.D1_AXIS].start, lines[NullclineLabel.D1_AXIS].end]) == [(0.0, 0.0), (0.0, N)]


def test_interior_lines_meet_at_the_interior_candidate(study_coeffs):
    lines = {s.label: s for s in nullclines(study_coeffs, Window.square(N)).segments}
    a = np.array([[s.coef_d1, s.coef_d2] for s in (lines[NullclineLabel.D1_INTERIOR], lines[NullclineLabel.D2_INTERIOR])])
    b = np.array([lines[NullclineLabel.D1_INTERIOR].rhs, lines[NullclineLabel.D2_INTERIOR].rhs])
    candidate = find_equilibria(study_coeffs).get(EquilibriumKind.INTERIOR).location
    assert np.linalg.solve(a, b) == pytest.approx(candidate.as_array(), rel=1e-9)


def test_zero_growth_line_passes_through_the_origin():
    c = LVCoefficients(r1=0.0, r2=0.2, a11=0.4, a12=0.2, a21=0.3, a22=0.4, n_total=1000.0)
    lines = {s.label: s for s in nullclines(c, Window.square(1000.0)).segments}
    segment = lines[NullclineLabel.D1_INTERIOR]
    assert segment.start == (0.0, 0.0)
    assert segment.end == (0.0, 0.0)


def test_vanishing_coefficients_leave_a_note():
    c = LVCoefficients(r1=0.0, r2=0.2, a11=0.0, a12=0.0, a21=0.3, a22=0.4, n_total=1000.0)
    result = nullclines(c, Window.square(1000.0))
    assert NullclineLabel.D1_INTERIOR not in {s.label for s in result.segments}
    assert any(note.startswith("D1-interior") for note in result.notes)


def test_line_outside_the_window_is_not_clipped():
    assert clip_line(1.0, 1.0, 50.0, Window(d1=(100.0, 200.0), d2=(100.0, 200.0))) is None


def test_empty_window_is_rejected(study_coeffs):
    with pytest.raises(EmptyWindow):
        nullclines(study_coeffs, Window(d1=(0.0, 0.0), d2=(0.0, N)))
    with pytest.raises(EmptyWindow):
        build_portrait(study_coeffs, Window(d1=(0.0, N), d2=(5.0, 5.0)))


def test_separatrices_of_the_d1_axis_saddle(study_coeffs):
    branches = separatrices(study_coeffs, _assessed(study_coeffs, EquilibriumKind.AXIS1),
                            Window.square(N), PORTRAIT_OPTS)
    assert len(branches) == 4
    by_key = {(b.kind, b.sign): b for b in branches}

    assert by_key[(BranchKind.UNSTABLE, 1)].skipped
    into_quadrant = by_key[(BranchKind.UNSTABLE, -1)]
    assert into_quadrant.terminal_reason == TerminalReason.CONVERGED.value
    assert into_quadrant.points[-1] == pytest.approx((0.0, 7090.909), abs=0.05)

    toward_origin = by_key[(BranchKind.STABLE, -1)]
    assert toward_origin.terminal_reason == TerminalReason.CONVERGED.value
    assert toward_origin.points[-1] == pytest.approx((0.0, 0.0), abs=0.05)
    assert all(d2 == 0.0 for _, d2 in toward_origin.points)

    outward = by_key[(BranchKind.STABLE, 1)]
    assert outward.terminal_reason == TerminalReason.LEFT_WINDOW.value
    assert outward.points[-1][0] > 1.05 * N


def test_separatrices_need_a_saddle(study_coeffs):
    with pytest.raises(NotASaddle):
        separatrices(study_coeffs, _assessed(study_coeffs, EquilibriumKind.AXIS2), Window.square(N))


def test_grid_points_are_row_major():
    assert grid_points(Window.square(10.0), 2) == [(2.5, 2.5), (7.5, 2.5), (2.5, 7.5), (7.5, 7.5)]
    with pytest.raises(ConfigError):
        grid_points(Window.square(10.0), 0)


@pytest.mark.parametrize("m", [1, 5])
def test_trajectory_bundle_size(study_coeffs, m):
    bundle = trajectory_bundle(study_coeffs, Window.square(N), m, PORTRAIT_OPTS)
    assert len(bundle) == m * m
    starts = [tuple(t.states[0]) for t in bundle]
    assert starts == grid_points(Window.square(N), m)
    for t in bundle:
        assert t.final_time <= 500.0
        assert np.linalg.norm(t.final_state - np.array(AXIS2)) < 1.0


def test_threaded_bundle_matches_serial(study_coeffs):
    serial = trajectory_bundle(study_coeffs, Window.square(N), 3, PORTRAIT_OPTS)
    threaded = trajectory_bundle(study_coeffs, Window.square(N), 3, PORTRAIT_OPTS, workers=4)
    for a, b in zip(serial, threaded):
        assert np.array_equal(a.states, b.states)


def test_svg_of_the_simulation_study(study_coeffs):
    svg = render_svg(build_portrait(study_coeffs, m=2, opts=PORTRAIT_OPTS))
    assert svg.count('id="equilibrium-') == 3
    assert svg.count('id="nullcline-') == 4
    assert 'id="equilibrium-interior"' not in svg
    assert 'id="outside-population"' in svg
    assert 'id="separatrix-' in svg
    assert re.search(r'id="separatrix-\d+-arrow-0"', svg)
    assert re.search(r'id="trajectory-\d+-arrow-0"', svg)


def test_svg_is_deterministic(study_coeffs):
    first = render_svg(build_portrait(study_coeffs, m=2, opts=PORTRAIT_OPTS))
    second = render_svg(build_portrait(study_coeffs, m=2, opts=PORTRAIT_OPTS))
    assert first == second


def test_continuum_is_drawn_with_only_the_origin_marked(symmetric_params):
    c = reduced_coefficients(symmetric_params)
    portrait = build_portrait(c, m=1, opts=PORTRAIT_OPTS)
    assert portrait.equilibria.degenerate
    svg = render_svg(portrait)
    assert 'id="continuum"' in svg
    assert svg.count('id="equilibrium-') == 1
    assert 'id="equilibrium-origin"' in svg


def test_absent_drug_marks_two_equilibria():
    c = reduced_coefficients(validate_parameters(simulation_study_parameters(beta1=0.0)))
    svg = render_svg(build_portrait(c, m=1, opts=PORTRAIT_OPTS, include_separatrices=False))
    assert svg.count('id="equilibrium-') == 2
    assert 'id="equilibrium-axis1"' not in svg

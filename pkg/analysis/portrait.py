"""Phase-plane geometry of the reduced system: nullclines, separatrices, trajectory bundles."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from analysis.equilibria import find_equilibria
from analysis.integrator import integrate
from analysis.stability import assess_equilibria
from models.parameters import LVCoefficients
from models.portrait import (
    BranchKind,
    Nullclines,
    NullclineLabel,
    NullclineSegment,
    PhasePortrait,
    SeparatrixBranch,
    Window,
)
from models.stability import AssessedEquilibrium, StabilityClass
from models.trajectory import IntegratorOptions, TerminalReason, Tier, Trajectory
from utils.errors import ConfigError, EmptyWindow, NotASaddle, StepFailure

logger = logging.getLogger(__name__)

SEPARATRIX_SEED_REL = 1e-4
WINDOW_MARGIN = 0.05
PORTRAIT_T_MAX = 500.0


def clip_line(coef_d1: float, coef_d2: float, rhs: float, window: Window) -> Optional[Tuple[Tuple[float, float], Tuple[float, float]]]:
    """Segment of coef_d1*x + coef_d2*y = rhs inside the window, or None."""
    (x_min, x_max), (y_min, y_max) = window.d1, window.d2
    tol_x = 1e-12 * max(abs(x_min), abs(x_max), 1.0)
    tol_y = 1e-12 * max(abs(y_min), abs(y_max), 1.0)

    hits = []
    if coef_d2 != 0.0:
        for x in (x_min, x_max):
            y = (rhs - coef_d1 * x) / coef_d2
            if y_min - tol_y <= y <= y_max + tol_y:
                hits.append((x, min(max(y, y_min), y_max)))
    if coef_d1 != 0.0:
        for y in (y_min, y_max):
            x = (rhs - coef_d2 * y) / coef_d1
            if x_min - tol_x <= x <= x_max + tol_x:
                hits.append((min(max(x, x_min), x_max), y))

    if not hits:
        return None
    hits = sorted(set(hits))
    best = (hits[0], hits[0])
    best_len = -1.0
    for i, a in enumerate(hits):
        for b in hits[i:]:
            length = (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2
            if length > best_len:
                best, best_len = (a, b), length
    return best


def nullclines(c: LVCoefficients, window: Window) -> Nullclines:
    if window.is_empty:
        raise EmptyWindow(f"window d1={window.d1}, d2={window.d2} has no area")

    lines = [
        (NullclineLabel.D1_AXIS, 1.0, 0.0, 0.0),
        (NullclineLabel.D1_INTERIOR, c.a11, c.a12, c.r1 * c.n_total),
        (NullclineLabel.D2_AXIS, 0.0, 1.0, 0.0),
        (NullclineLabel.D2_INTERIOR, c.a21, c.a22, c.r2 * c.n_total),
    ]
    segments: List[NullclineSegment] = []
    notes: List[str] = []
    for label, a, b, rhs in lines:
        if a == 0.0 and b == 0.0:
            notes.append(f"{label.value}: both competition coefficients vanish, no line")
            continue
        clipped = clip_line(a, b, rhs, window)
        if clipped is None:
            notes.append(f"{label.value}: line does not cross the window")
            continue
        segments.append(NullclineSegment(label=label, start=clipped[0], end=clipped[1],
                                         coef_d1=a, coef_d2=b, rhs=rhs))
    return Nullclines(segments=segments, notes=notes)


def separatrices(
    c: LVCoefficients,
    saddle: AssessedEquilibrium,
    window: Window,
    opts: Optional[IntegratorOptions] = None,
) -> List[SeparatrixBranch]:
    """Four half-branches seeded at saddle +/- eps * eigenvector, eps = 1e-4 N.

    Seeds outside the nonnegative quadrant are returned as skipped branches.
    """
    report = saddle.report
    if report.stability != StabilityClass.SADDLE or len(report.eigenvectors) != 2:
        raise NotASaddle(
            f"{saddle.equilibrium.kind.value} at ({saddle.equilibrium.location.d1:g}, "
            f"{saddle.equilibrium.location.d2:g}) is {report.stability.value}"
        )

    opts = opts or IntegratorOptions(t_max=PORTRAIT_T_MAX)
    eps = SEPARATRIX_SEED_REL * c.n_total
    origin = saddle.equilibrium.location.as_array()
    bounds = window.bounds(WINDOW_MARGIN)

    by_kind = {}
    for eigenvalue, vector in zip(report.eigenvalues, report.eigenvectors):
        kind = BranchKind.UNSTABLE if eigenvalue.real > 0.0 else BranchKind.STABLE
        by_kind[kind] = np.array(vector)

    branches = []
    for kind in (BranchKind.UNSTABLE, BranchKind.STABLE):
        direction = 1 if kind == BranchKind.UNSTABLE else -1
        branch_opts = opts.model_copy(update={"direction": direction, "bounds": bounds})
        for sign in (1, -1):
            seed = origin + sign * eps * by_kind[kind]
            seed_xy = (float(seed[0]), float(seed[1]))
            if np.any(seed < 0.0):
                branches.append(SeparatrixBranch(kind=kind, sign=sign, seed=seed_xy, skipped=True))
                continue
            try:
                trajectory = integrate(Tier.REDUCED, c, seed, branch_opts)
            except StepFailure as exc:
                trajectory = exc.trajectory
            branches.append(SeparatrixBranch(
                kind=kind,
                sign=sign,
                seed=seed_xy,
                points=[(float(x), float(y)) for x, y in trajectory.states],
                terminal_reason=trajectory.terminal_reason.value,
            ))
    return branches


def grid_points(window: Window, m: int) -> List[Tuple[float, float]]:
    """Cell centres of an m x m grid, row-major (rows run along D2)."""
    if m < 1:
        raise ConfigError(f"grid size must be >= 1, got {m}")
    d1_values = [window.d1[0] + (k + 0.5) * window.width / m for k in range(m)]
    d2_values = [window.d2[0] + (k + 0.5) * window.height / m for k in range(m)]
    return [(d1, d2) for d2 in d2_values for d1 in d1_values]


def _integrate_quietly(args) -> Trajectory:
    c, point, opts = args
    try:
        return integrate(Tier.REDUCED, c, np.array(point), opts)
    except StepFailure as exc:
        logger.warning("bundle trajectory from (%g, %g) failed: %s", point[0], point[1], exc.detail)
        return exc.trajectory


def trajectory_bundle(
    c: LVCoefficients,
    window: Window,
    m: int,
    opts: Optional[IntegratorOptions] = None,
    workers: int = 1,
) -> List[Trajectory]:
    opts = opts or IntegratorOptions(t_max=PORTRAIT_T_MAX)
    jobs = [(c, point, opts) for point in grid_points(window, m)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_integrate_quietly, jobs))
    return [_integrate_quietly(job) for job in jobs]


def build_portrait(
    c: LVCoefficients,
    window: Optional[Window] = None,
    m: int = 5,
    opts: Optional[IntegratorOptions] = None,
    include_separatrices: bool = True,
    include_trajectories: bool = True,
    workers: int = 1,
) -> PhasePortrait:
    window = window or Window.square(c.n_total)
    lines = nullclines(c, window)
    eq_set = find_equilibria(c)
    assessed = assess_equilibria(c, eq_set)

    branches: List[SeparatrixBranch] = []
    if include_separatrices:
        for item in assessed:
            if item.report.stability == StabilityClass.SADDLE and item.equilibrium.feasible:
                branches.extend(separatrices(c, item, window, opts))

    trajectories = trajectory_bundle(c, window, m, opts, workers) if include_trajectories else []
    finished = sum(1 for t in trajectories if t.terminal_reason != TerminalReason.STEP_FAILURE)
    logger.info("portrait: %d nullcline segments, %d equilibria, %d separatrix branches, %d/%d trajectories",
                len(lines.segments), len(eq_set.points), len(branches), finished, len(trajectories))

    return PhasePortrait(
        window=window,
        n_total=c.n_total,
        nullclines=lines,
        equilibria=eq_set,
        assessments=assessed,
        separatrices=branches,
        trajectories=trajectories,
    )

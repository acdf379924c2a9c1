# utils/svg_renderer.py
"""SVG rendering of phase portraits and regime maps (matplotlib, Agg backend).

Output is byte-stable: fixed hash salt, text kept as text, no date metadata.
Artists carry ``gid`` values so elements can be found in the document.
"""

import io
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib.colors import ListedColormap
from matplotlib.patches import Patch
from pydantic import BaseModel, ConfigDict

from analysis.portrait import clip_line
from models.equilibrium import EquilibriumKind, EquilibriumSet
from models.portrait import BranchKind, PhasePortrait
from models.regime import RegimeClass
from models.report import SweepRow
from models.stability import AssessedEquilibrium, StabilityClass
from utils.errors import EmptyWindow

logger = logging.getLogger(__name__)

SVG_RC = {
    "svg.hashsalt": "addiction-dynamics",
    "svg.fonttype": "none",
    "path.simplify": False,
}
SVG_METADATA = {"Date": None}


class PortraitStyle(BaseModel):
    model_config = ConfigDict(frozen=True)

    width_in: float = 7.0
    height_in: float = 7.0
    # arrow spacing along a curve, in window-normalized arc length
    arrow_spacing: float = 0.25
    arrow_size: float = 9.0
    marker_size: float = 9.0
    nullcline_color: str = "#555555"
    separatrix_color: str = "#b2182b"
    trajectory_color: str = "#2166ac"
    equilibrium_color: str = "#000000"
    continuum_color: str = "#1b7837"
    shade_color: str = "#dddddd"


# ==============================
# MARKERS
# ==============================
_MARKER_STYLE = {
    StabilityClass.STABLE_NODE: {"marker": "o", "fillstyle": "full"},
    StabilityClass.STABLE_SPIRAL: {"marker": "o", "fillstyle": "full"},
    StabilityClass.UNSTABLE_NODE: {"marker": "o", "fillstyle": "none"},
    StabilityClass.UNSTABLE_SPIRAL: {"marker": "o", "fillstyle": "none"},
    StabilityClass.SADDLE: {"marker": "o", "fillstyle": "left"},
    StabilityClass.CENTER: {"marker": "D", "fillstyle": "none"},
    StabilityClass.NON_HYPERBOLIC: {"marker": "s", "fillstyle": "top"},
}


def _to_svg(fig) -> str:
    buffer = io.BytesIO()
    fig.savefig(buffer, format="svg", metadata=SVG_METADATA)
    plt.close(fig)
    return buffer.getvalue().decode("utf-8")


def _arrow_anchors(points: np.ndarray, scale: Tuple[float, float], spacing: float) -> List[Tuple[np.ndarray, np.ndarray]]:
    """(tail, head) pairs every ``spacing`` of arc length, measured in window units."""
    if len(points) < 2 or spacing <= 0.0:
        return []
    normalized = points / np.asarray(scale)
    seg = np.linalg.norm(np.diff(normalized, axis=0), axis=1)
    arc = np.concatenate([[0.0], np.cumsum(seg)])
    total = arc[-1]
    if total <= 0.0:
        return []

    anchors = []
    delta = min(0.01, 0.25 * spacing)
    s = spacing
    while s + delta <= total:
        tail = np.array([np.interp(s, arc, points[:, k]) for k in range(2)])
        head = np.array([np.interp(s + delta, arc, points[:, k]) for k in range(2)])
        anchors.append((tail, head))
        s += spacing
    return anchors


def _draw_arrows(ax, points: np.ndarray, reverse: bool, color: str, style: PortraitStyle, gid: str) -> None:
    scale = (max(np.ptp(ax.get_xlim()), 1e-300), max(np.ptp(ax.get_ylim()), 1e-300))
    for k, (tail, head) in enumerate(_arrow_anchors(points, scale, style.arrow_spacing)):
        if reverse:
            tail, head = head, tail
        arrow = ax.annotate(
            "", xy=tuple(head), xytext=tuple(tail),
            arrowprops=dict(arrowstyle="-|>", color=color, lw=0.8, mutation_scale=style.arrow_size),
        )
        arrow.arrow_patch.set_gid(f"{gid}-arrow-{k}")


def _on_line(location, eq_set: EquilibriumSet, n_total: float) -> bool:
    line = eq_set.continuum
    if line is None:
        return False
    norm = float(np.hypot(line.coef_d1, line.coef_d2))
    if norm == 0.0:
        return True
    residual = abs(line.coef_d1 * location.d1 + line.coef_d2 * location.d2 - line.rhs) / norm
    return residual <= 1e-9 * n_total


def _markable(items: Sequence[AssessedEquilibrium], eq_set: EquilibriumSet, bounds, n_total: float) -> List[AssessedEquilibrium]:
    d1_min, d1_max, d2_min, d2_max = bounds
    keep = []
    for item in items:
        point = item.equilibrium
        if not point.feasible:
            continue
        if not (d1_min <= point.location.d1 <= d1_max and d2_min <= point.location.d2 <= d2_max):
            continue
        if eq_set.degenerate and point.kind != EquilibriumKind.ORIGIN and _on_line(point.location, eq_set, n_total):
            continue
        keep.append(item)
    return keep


# ==============================
# PHASE PORTRAIT
# ==============================
def render_svg(portrait: PhasePortrait, style: Optional[PortraitStyle] = None) -> str:
    style = style or PortraitStyle()
    window = portrait.window
    if window.is_empty:
        raise EmptyWindow(f"window d1={window.d1}, d2={window.d2} has no area")

    n_total = portrait.n_total
    with matplotlib.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=(style.width_in, style.height_in))
        ax.set_xlim(*window.d1)
        ax.set_ylim(*window.d2)
        ax.set_xlabel("D1 (persons)")
        ax.set_ylabel("D2 (persons)")
        ax.set_title("Reduced two-drug model: phase plane")

        # d1 + d2 > N lies outside the population
        x0, x1 = window.d1
        y0, y1 = window.d2
        corners = [(x0, y1), (x1, y1), (x1, y0)]
        cut = [(x, n_total - x) for x in (x0, x1) if y0 <= n_total - x <= y1]
        cut += [(n_total - y, y) for y in (y0, y1) if x0 <= n_total - y <= x1]
        region = list(dict.fromkeys([pt for pt in corners if pt[0] + pt[1] > n_total] + cut))
        if len(region) >= 3:
            centre = np.mean(np.array(region), axis=0)
            region.sort(key=lambda pt: np.arctan2(pt[1] - centre[1], pt[0] - centre[0]))
            shade = ax.fill([pt[0] for pt in region], [pt[1] for pt in region],
                            color=style.shade_color, alpha=0.6, zorder=0, label="D1 + D2 > N")[0]
            shade.set_gid("outside-population")

        for segment in portrait.nullclines.segments:
            (sx, sy), (ex, ey) = segment.start, segment.end
            line, = ax.plot([sx, ex], [sy, ey], linestyle="--", linewidth=1.2,
                            color=style.nullcline_color, zorder=1)
            line.set_gid(f"nullcline-{segment.label.value}")

        eq_set = portrait.equilibria
        if eq_set.degenerate and eq_set.continuum is not None:
            clipped = clip_line(eq_set.continuum.coef_d1, eq_set.continuum.coef_d2,
                                eq_set.continuum.rhs, window)
            if clipped is not None:
                (sx, sy), (ex, ey) = clipped
                line, = ax.plot([sx, ex], [sy, ey], linewidth=2.5, color=style.continuum_color,
                                zorder=2, label="continuum of equilibria")
                line.set_gid("continuum")

        for index, trajectory in enumerate(portrait.trajectories):
            points = trajectory.states[:, :2]
            line, = ax.plot(points[:, 0], points[:, 1], linewidth=0.7,
                            color=style.trajectory_color, zorder=3)
            line.set_gid(f"trajectory-{index}")
            _draw_arrows(ax, points, trajectory.direction < 0, style.trajectory_color, style,
                         f"trajectory-{index}")

        for index, branch in enumerate(portrait.separatrices):
            if branch.skipped or len(branch.points) < 2:
                continue
            points = np.array(branch.points)
            line, = ax.plot(points[:, 0], points[:, 1], linewidth=2.2,
                            color=style.separatrix_color, zorder=4)
            line.set_gid(f"separatrix-{index}")
            _draw_arrows(ax, points, branch.kind == BranchKind.STABLE, style.separatrix_color, style,
                         f"separatrix-{index}")

        for item in _markable(portrait.assessments, eq_set, window.bounds(0.0), n_total):
            marker = _MARKER_STYLE[item.report.stability]
            point = item.equilibrium
            line, = ax.plot([point.location.d1], [point.location.d2], linestyle="none",
                            marker=marker["marker"], fillstyle=marker["fillstyle"],
                            markersize=style.marker_size, color=style.equilibrium_color,
                            markerfacecoloralt="white", markeredgewidth=1.4, zorder=5, clip_on=False,
                            label=f"{point.kind.value}: {item.report.stability.value}")
            line.set_gid(f"equilibrium-{point.kind.value}")

        ax.legend(loc="upper right", fontsize=8, frameon=True)
        ax.grid(True, linewidth=0.3, alpha=0.5)
        fig.tight_layout()
        svg = _to_svg(fig)

    logger.debug("rendered portrait SVG (%d bytes)", len(svg))
    return svg


# ==============================
# REGIME MAP
# ==============================
_REGIME_ORDER = list(RegimeClass)
_REGIME_COLORS = {
    RegimeClass.EXTINCTION: "#bababa",
    RegimeClass.EXCLUSION_1: "#4393c3",
    RegimeClass.EXCLUSION_2: "#d6604d",
    RegimeClass.BISTABLE_EXCLUSION: "#8073ac",
    RegimeClass.COEXISTENCE: "#5aae61",
    RegimeClass.DEGENERATE: "#000000",
    RegimeClass.NON_HYPERBOLIC_BOUNDARY: "#fee090",
    RegimeClass.NO_STABLE_STATE: "#ffffff",
}


def _edges(values: np.ndarray) -> np.ndarray:
    if len(values) == 1:
        return np.array([values[0] - 0.5, values[0] + 0.5])
    mid = 0.5 * (values[1:] + values[:-1])
    return np.concatenate([[2 * values[0] - mid[0]], mid, [2 * values[-1] - mid[-1]]])


def render_regime_map(parameters: Sequence[str], axis_values: Sequence[np.ndarray],
                      rows: Sequence[SweepRow], style: Optional[PortraitStyle] = None) -> str:
    """Heat map of regime classes over one or two swept parameters.

    Rows are in row-major order: the last parameter varies fastest.
    """
    style = style or PortraitStyle()
    codes = np.array([_REGIME_ORDER.index(row.regime) for row in rows], dtype=float)
    cmap = ListedColormap([_REGIME_COLORS[regime] for regime in _REGIME_ORDER])

    with matplotlib.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=(style.width_in, style.height_in if len(parameters) == 2 else 2.5))
        if len(parameters) == 1:
            xs = np.asarray(axis_values[0])
            grid = codes.reshape(1, len(xs))
            mesh = ax.pcolormesh(_edges(xs), np.array([0.0, 1.0]), grid, cmap=cmap,
                                 vmin=-0.5, vmax=len(_REGIME_ORDER) - 0.5, shading="flat")
            ax.set_yticks([])
            ax.set_xlabel(parameters[0])
        else:
            outer, inner = (np.asarray(v) for v in axis_values)
            grid = codes.reshape(len(outer), len(inner))
            mesh = ax.pcolormesh(_edges(inner), _edges(outer), grid, cmap=cmap,
                                 vmin=-0.5, vmax=len(_REGIME_ORDER) - 0.5, shading="flat")
            ax.set_xlabel(parameters[1])
            ax.set_ylabel(parameters[0])
        mesh.set_gid("regime-map")
        ax.set_title("Regime map")

        present: Dict[RegimeClass, None] = dict.fromkeys(row.regime for row in rows)
        handles = [Patch(facecolor=_REGIME_COLORS[regime], edgecolor="#333333", label=regime.value)
                   for regime in _REGIME_ORDER if regime in present]
        ax.legend(handles=handles, loc="upper left", bbox_to_anchor=(1.01, 1.0), fontsize=8)
        fig.tight_layout()
        svg = _to_svg(fig)

    return svg


def write_svg(path: str, svg: str) -> str:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(svg)
    logger.info("wrote %s", path)
    return path

# commands/sweep.py
"""sweep: regime map over one or two rate parameters."""

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Sequence, Tuple

from analysis.coefficients import validate_parameters
from analysis.regime import classify_regime
from commands.common import out_path, prepare
from config import settings
from models.equilibrium import EquilibriumKind
from models.parameters import ModelParameters
from models.report import SweepRow
from models.run_config import OutputFormat, SweepAxis
from utils.errors import EXIT_OK, ConfigError, InvalidSweepAxis
from utils.exporters import write_json, write_sweep_csv
from utils.report_generator import ReportGenerator
from utils.svg_renderer import render_regime_map, write_svg

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("sweep", help="regime classification over a parameter grid")
    parser.set_defaults(handler=run)


def check_axes(axes: Sequence[SweepAxis]) -> None:
    seen = set()
    for axis in axes:
        if axis.parameter not in ModelParameters.RATE_FIELDS:
            raise InvalidSweepAxis(
                f"unknown sweep parameter {axis.parameter!r}; expected one of {', '.join(ModelParameters.RATE_FIELDS)}"
            )
        if axis.parameter in seen:
            raise InvalidSweepAxis(f"parameter {axis.parameter!r} is swept twice")
        seen.add(axis.parameter)
        for bound in (axis.start, axis.stop):
            if not math.isfinite(bound) or bound < 0.0 or bound > 1.0:
                raise InvalidSweepAxis(f"{axis.parameter} range [{axis.start}, {axis.stop}] is not within [0, 1]")


def _point(eq) -> List[float]:
    return [eq.location.d1, eq.location.d2]


def evaluate_cell(job: Tuple[ModelParameters, Dict[str, float]]) -> SweepRow:
    base, values = job
    params = validate_parameters(base.with_updates(**values))
    report = classify_regime(params)
    eq_set = report.equilibria

    axis1 = eq_set.get(EquilibriumKind.AXIS1)
    axis2 = eq_set.get(EquilibriumKind.AXIS2)
    interior = eq_set.get(EquilibriumKind.INTERIOR)
    return SweepRow(
        values=values,
        regime=report.regime,
        origin_case=report.origin.case.value,
        stable_kinds=[kind.value for kind in report.stable_kinds],
        feasible_count=len(eq_set.feasible_points),
        axis1=_point(axis1) if axis1 else None,
        axis2=_point(axis2) if axis2 else None,
        interior=_point(interior) if interior else None,
        interior_feasible=interior.feasible if interior else None,
        degenerate=eq_set.degenerate,
    )


def sweep_jobs(base: ModelParameters, axes: Sequence[SweepAxis]) -> List[Tuple[ModelParameters, Dict[str, float]]]:
    """Row-major grid: the last axis varies fastest."""
    names = [axis.parameter for axis in axes]
    grids = [[float(v) for v in axis.values()] for axis in axes]
    return [(base, dict(zip(names, combo))) for combo in itertools.product(*grids)]


def run_sweep(base: ModelParameters, axes: Sequence[SweepAxis], workers: int = 1) -> List[SweepRow]:
    check_axes(axes)
    jobs = sweep_jobs(base, axes)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(evaluate_cell, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return [evaluate_cell(job) for job in jobs]


def run(args) -> int:
    config, params, directory = prepare(args)
    if config.sweep is None:
        raise ConfigError("the sweep command needs a 'sweep' section in the config")

    axes = config.sweep.axes
    names = [axis.parameter for axis in axes]
    workers = config.sweep.workers or settings.SWEEP_WORKERS
    logger.info("sweep: %s with %d worker(s)", " x ".join(f"{a.parameter}[{a.steps}]" for a in axes), workers)

    rows = run_sweep(params.raw(), axes, workers)

    if config.wants(OutputFormat.CSV):
        write_sweep_csv(out_path(directory, "sweep.csv"), names, rows)
    if config.wants(OutputFormat.JSON):
        write_json(out_path(directory, "sweep.json"),
                   {"parameters": names, "rows": [row.model_dump(mode="json") for row in rows]})
    if config.sweep.heatmap and config.wants(OutputFormat.SVG):
        svg = render_regime_map(names, [axis.values() for axis in axes], rows)
        write_svg(out_path(directory, "regime_map.svg"), svg)
    if config.wants(OutputFormat.XLSX):
        ReportGenerator.generate_regime_workbook(names, rows, out_path(directory, "regime_map.xlsx"))

    counts: Dict[str, int] = {}
    for row in rows:
        counts[row.regime.value] = counts.get(row.regime.value, 0) + 1
    logger.info("sweep: %d cells, %s", len(rows), ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return EXIT_OK

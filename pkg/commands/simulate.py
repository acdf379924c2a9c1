# commands/simulate.py
"""simulate: integrate each configured tier from each initial state."""

import logging
from typing import Dict, Optional

import numpy as np

from analysis.integrator import integrate, reduction_error
from commands.common import out_path, prepare
from models.report import SimulationRunSummary, SimulationSummary
from models.run_config import InitialCondition, OutputFormat
from models.trajectory import ReductionErrorReport, TerminalReason, Tier, Trajectory
from utils.errors import EXIT_OK, EXIT_RUNTIME, ConfigError, StepFailure
from utils.exporters import write_json, write_trajectory_csv

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("simulate", help="integrate the full, exact4 and/or reduced tiers")
    parser.set_defaults(handler=run)


def initial_vector(ic: InitialCondition, tier: Tier, params) -> np.ndarray:
    if tier == Tier.FULL:
        return ic.full(params)
    if tier == Tier.EXACT4:
        return ic.exact4(params)
    return ic.reduced()


def conservation_drift(trajectory: Trajectory, n_total: float) -> Optional[float]:
    """max |sum(X) - N| / N over the samples; full tier only."""
    if trajectory.tier != Tier.FULL:
        return None
    return float(np.max(np.abs(trajectory.states.sum(axis=1) - n_total)) / n_total)


def _summarize(label: str, trajectory: Trajectory, n_total: float, csv_file: Optional[str],
               error: Optional[str] = None) -> SimulationRunSummary:
    return SimulationRunSummary(
        run=label,
        tier=trajectory.tier,
        terminal_reason=trajectory.terminal_reason,
        final_time=trajectory.final_time,
        terminal_state={name: float(v) for name, v in zip(trajectory.columns, trajectory.final_state)},
        steps_taken=trajectory.stats.steps_taken,
        steps_rejected=trajectory.stats.steps_rejected,
        max_conservation_drift=conservation_drift(trajectory, n_total),
        csv_file=csv_file,
        error=error,
    )


def run(args) -> int:
    config, params, directory = prepare(args)
    sim = config.simulation
    if not sim.initial_states:
        raise ConfigError("simulation.initial_states is empty")

    write_csv = config.wants(OutputFormat.CSV)
    runs = []
    reduction: Dict[str, ReductionErrorReport] = {}
    failed = 0

    for index, ic in enumerate(sim.initial_states):
        label = ic.label(index)
        for tier in sim.tiers:
            x0 = initial_vector(ic, tier, params)
            logger.info("simulate %s/%s from %s", label, tier.value, x0.tolist())
            error = None
            try:
                trajectory = integrate(tier, params, x0, sim.integrator)
            except StepFailure as exc:
                trajectory = exc.trajectory
                error = exc.detail
                failed += 1
                logger.warning("run %s/%s failed: %s", label, tier.value, exc.detail)

            csv_file = None
            if write_csv:
                csv_file = f"{label}_{tier.value}.csv"
                write_trajectory_csv(out_path(directory, csv_file), trajectory)
            runs.append(_summarize(label, trajectory, params.n_total, csv_file, error))

        if Tier.EXACT4 in sim.tiers and Tier.REDUCED in sim.tiers:
            try:
                reduction[label] = reduction_error(params, ic.exact4(params), sim.integrator)
            except StepFailure as exc:
                logger.warning("reduction error for %s not available: %s", label, exc.detail)

    summary = SimulationSummary(
        normalized=bool(getattr(args, "normalized", False)),
        runs=runs,
        reduction_errors=reduction,
        failed_runs=failed,
    )
    if config.wants(OutputFormat.JSON):
        write_json(out_path(directory, "simulation.json"), summary)

    if runs and failed == len(runs):
        logger.error("simulate: all %d runs failed", failed)
        return EXIT_RUNTIME
    done = sum(1 for r in runs if r.terminal_reason != TerminalReason.STEP_FAILURE)
    logger.info("simulate: %d/%d runs finished", done, len(runs))
    return EXIT_OK

# commands/analyze.py
"""analyze: coefficients, equilibria, stability and regime for one parameter set."""

import logging
from typing import List

from analysis.regime import classify_regime
from commands.common import out_path, prepare
from models.report import AnalysisReport
from models.run_config import OutputFormat
from utils.errors import EXIT_OK
from utils.exporters import write_json, write_text

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("analyze", help="equilibria, stability and regime of the reduced model")
    parser.set_defaults(handler=run)


def build_report(params, normalized: bool = False) -> AnalysisReport:
    regime = classify_regime(params)
    return AnalysisReport(
        normalized=normalized,
        coefficients=regime.coefficients,
        flags=list(params.flags),
        equilibria=regime.equilibria,
        assessments=regime.assessments,
        origin=regime.origin,
        regime=regime.regime,
    )


def format_report(report: AnalysisReport) -> str:
    c = report.coefficients
    unit = "fraction of N" if report.normalized else "persons"
    lines: List[str] = [
        "Reduced two-drug model",
        "=" * 22,
        f"N = {c.n_total:.10g} ({unit})",
        f"growth:      r1 = {c.r1:.10g}   r2 = {c.r2:.10g}   (1/year)",
        f"competition: a11 = {c.a11:.10g}   a12 = {c.a12:.10g}",
        f"             a21 = {c.a21:.10g}   a22 = {c.a22:.10g}",
        "",
        f"origin: theta1 = {report.origin.theta1:.10g}, theta2 = {report.origin.theta2:.10g}, "
        f"mu = {report.origin.mu:.10g} -> {report.origin.case.value}",
        "",
        f"equilibria (interior outcome: {report.equilibria.interior_outcome.value}, "
        f"det = {report.equilibria.determinant:.6g})",
    ]
    for item in report.assessments:
        point = item.equilibrium
        eigs = ", ".join(
            f"{e.real:.6g}" if e.imag == 0.0 else f"{e.real:.6g}{e.imag:+.6g}i"
            for e in item.report.eigenvalues
        )
        lines.append(
            f"  {point.kind.value:<8} ({point.location.d1:.6f}, {point.location.d2:.6f})  "
            f"{'feasible' if point.feasible else 'infeasible':<10}  "
            f"{item.report.stability.value:<26} eigenvalues [{eigs}]"
        )
    if report.equilibria.degenerate and report.equilibria.continuum is not None:
        line = report.equilibria.continuum
        lines.append(f"  continuum: {line.coef_d1:.10g} D1 + {line.coef_d2:.10g} D2 = {line.rhs:.10g}")
    if report.flags:
        lines.append("")
        lines.append("special cases:")
        lines.extend(f"  {flag.case.value}: {flag.detail}" for flag in report.flags)
    lines.append("")
    lines.append(f"regime: {report.regime.value}")
    return "\n".join(lines) + "\n"


def run(args) -> int:
    config, params, directory = prepare(args)
    logger.info("analyze: N=%g", params.n_total)

    report = build_report(params, normalized=bool(getattr(args, "normalized", False)))
    if config.wants(OutputFormat.JSON):
        write_json(out_path(directory, "analysis.json"), report)
    if config.wants(OutputFormat.TXT):
        write_text(out_path(directory, "analysis.txt"), format_report(report))

    logger.info("analyze: regime %s", report.regime.value)
    return EXIT_OK

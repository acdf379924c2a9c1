# commands/portrait.py
"""portrait: phase plane of the reduced model as SVG plus geometry JSON."""

import logging

from analysis.coefficients import reduced_coefficients
from analysis.portrait import build_portrait
from commands.common import out_path, prepare
from config import settings
from models.portrait import Window
from models.run_config import OutputFormat
from utils.errors import EXIT_OK
from utils.exporters import portrait_payload, write_json
from utils.svg_renderer import render_svg, write_svg

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("portrait", help="nullclines, equilibria, separatrices and trajectories")
    parser.set_defaults(handler=run)


def run(args) -> int:
    config, params, directory = prepare(args)
    c = reduced_coefficients(params)
    portrait_cfg = config.portrait
    window = portrait_cfg.window or Window.square(c.n_total)
    logger.info("portrait: window d1=%s d2=%s, %dx%d grid", window.d1, window.d2, portrait_cfg.grid, portrait_cfg.grid)

    portrait = build_portrait(
        c,
        window=window,
        m=portrait_cfg.grid,
        opts=portrait_cfg.integrator,
        include_separatrices=portrait_cfg.separatrices,
        include_trajectories=portrait_cfg.trajectories,
        workers=settings.SWEEP_WORKERS,
    )

    if config.wants(OutputFormat.SVG):
        write_svg(out_path(directory, "portrait.svg"), render_svg(portrait))
    if config.wants(OutputFormat.JSON):
        write_json(out_path(directory, "portrait.json"), portrait_payload(portrait))
    return EXIT_OK

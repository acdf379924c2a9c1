# commands/common.py
"""Shared plumbing for the subcommands: config loading and output location."""

import logging
import os
from typing import Optional, Tuple

from analysis.coefficients import validate_parameters
from config import settings
from models.parameters import ValidatedParameters
from models.run_config import RunConfig
from utils.errors import ConfigError
from utils.exporters import ensure_directory

logger = logging.getLogger(__name__)


def load_run_config(args) -> RunConfig:
    path = getattr(args, "config", None)
    if not path:
        raise ConfigError(f"the {args.command} command needs --config <path>")
    config = RunConfig.from_file(path)
    if getattr(args, "normalized", False):
        config = config.normalized()
        logger.info("normalized mode: populations are fractions of N")
    return config


def prepare(args) -> Tuple[RunConfig, ValidatedParameters, str]:
    """Config, validated parameters and the (created) output directory."""
    config = load_run_config(args)
    params = validate_parameters(config.parameters)
    for flag in params.flags:
        logger.info("special case %s: %s", flag.case.value, flag.detail)
    return config, params, output_directory(args, config)


def output_directory(args, config: Optional[RunConfig] = None) -> str:
    # --out > env override > config > default
    directory = (
        getattr(args, "out", None)
        or settings.OUTPUT_DIR_OVERRIDE
        or (config.output.directory if config is not None else None)
        or settings.DEFAULT_OUTPUT_DIR
    )
    return ensure_directory(directory)


def out_path(directory: str, name: str) -> str:
    return os.path.join(directory, name)

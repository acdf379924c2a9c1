# commands/__init__.py

from . import analyze, portrait, simulate, sweep, verify_paper

# subcommand name -> module exposing register(subparsers) and run(args)
COMMANDS = {
    "analyze": analyze,
    "simulate": simulate,
    "portrait": portrait,
    "sweep": sweep,
    "verify-paper": verify_paper,
}

__all__ = ["COMMANDS", "analyze", "portrait", "simulate", "sweep", "verify_paper"]

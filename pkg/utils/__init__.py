# utils/__init__.py

from .errors import (
    EXIT_OK,
    EXIT_RUNTIME,
    EXIT_VALIDATION,
    EXIT_VERIFICATION,
    ConfigError,
    EmptyWindow,
    InvalidInitialState,
    InvalidSweepAxis,
    ModelError,
    NonPositivePopulation,
    NotASaddle,
    ParameterValidationError,
    RateOutOfRange,
    SeedlessRejected,
    SingularClosure,
    StepFailure,
    ValidationFailure,
    VerificationFailed,
)

__all__ = [
    "EXIT_OK",
    "EXIT_RUNTIME",
    "EXIT_VALIDATION",
    "EXIT_VERIFICATION",
    "ConfigError",
    "EmptyWindow",
    "InvalidInitialState",
    "InvalidSweepAxis",
    "ModelError",
    "NonPositivePopulation",
    "NotASaddle",
    "ParameterValidationError",
    "RateOutOfRange",
    "SeedlessRejected",
    "SingularClosure",
    "StepFailure",
    "ValidationFailure",
    "VerificationFailed",
]

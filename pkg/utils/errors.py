# utils/errors.py

from typing import List, Optional

# ==============================
# EXIT CODES
# ==============================
EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2
EXIT_VERIFICATION = 3


class ModelError(Exception):
    """Base error; carries a human-readable detail and the CLI exit code."""

    exit_code: int = EXIT_RUNTIME

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


# ==============================
# VALIDATION (exit 1)
# ==============================
class ValidationFailure(ModelError):
    exit_code = EXIT_VALIDATION


class ParameterValidationError(ValidationFailure):
    """Raised for the first problem found; ``errors`` holds all of them."""

    def __init__(self, detail: str, field: Optional[str] = None):
        super().__init__(detail)
        self.field = field
        self.errors: List["ParameterValidationError"] = [self]


class RateOutOfRange(ParameterValidationError):
    pass


class NonPositivePopulation(ParameterValidationError):
    pass


class SingularClosure(ParameterValidationError):
    pass


class ConfigError(ValidationFailure):
    pass


class InvalidSweepAxis(ValidationFailure):
    pass


class InvalidInitialState(ValidationFailure):
    pass


class EmptyWindow(ValidationFailure):
    pass


class SeedlessRejected(ValidationFailure):
    pass


# ==============================
# RUNTIME (exit 2)
# ==============================
class StepFailure(ModelError):
    exit_code = EXIT_RUNTIME


class NotASaddle(ModelError):
    exit_code = EXIT_RUNTIME


# ==============================
# VERIFICATION (exit 3)
# ==============================
class VerificationFailed(ModelError):
    exit_code = EXIT_VERIFICATION

from pydantic import BaseModel, ConfigDict, Field, ValidationError
from typing import List, Optional
from enum import Enum
import json

import numpy as np

from models.parameters import ModelParameters
from models.portrait import Window
from models.trajectory import IntegratorOptions, Tier
from utils.errors import ConfigError, InvalidInitialState


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    SVG = "svg"
    TXT = "txt"
    XLSX = "xlsx"
    PDF = "pdf"


class InitialCondition(BaseModel):
    """One starting point, expressed for every tier.

    R1/R2 default to 0 (or to the steady-state closure when ``closure`` is
    set); S defaults to whatever keeps the population at N.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: Optional[str] = None
    d1: float = Field(..., ge=0)
    d2: float = Field(..., ge=0)
    r1: Optional[float] = Field(None, ge=0)
    r2: Optional[float] = Field(None, ge=0)
    s: Optional[float] = Field(None, ge=0)
    closure: bool = False

    def label(self, index: int) -> str:
        return self.name or f"run{index:02d}"

    def reduced(self) -> np.ndarray:
        return np.array([self.d1, self.d2])

    def exact4(self, p) -> np.ndarray:
        if self.closure:
            from analysis.rhs import qss_recovered  # models is imported by analysis.rhs
            r1, r2 = qss_recovered(p, (self.d1, self.d2))
        else:
            r1, r2 = self.r1 or 0.0, self.r2 or 0.0
        return np.array([self.d1, self.d2, r1, r2])

    def full(self, p) -> np.ndarray:
        d1, d2, r1, r2 = self.exact4(p)
        s = p.n_total - d1 - d2 - r1 - r2
        if self.s is not None:
            if abs(self.s - s) > 1e-9 * p.n_total:
                raise InvalidInitialState(f"S={self.s!r} does not complete the population to N={p.n_total!r}")
            s = self.s
        return np.array([s, d1, d2, r1, r2])

    def scaled(self, factor: float) -> "InitialCondition":
        update = {key: getattr(self, key) * factor
                  for key in ("d1", "d2", "r1", "r2", "s") if getattr(self, key) is not None}
        return self.model_copy(update=update)


class SimulationConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    tiers: List[Tier] = [Tier.REDUCED]
    initial_states: List[InitialCondition] = []
    integrator: IntegratorOptions = IntegratorOptions()


class PortraitConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    window: Optional[Window] = None
    grid: int = Field(5, ge=1)
    separatrices: bool = True
    trajectories: bool = True
    integrator: IntegratorOptions = IntegratorOptions(t_max=500.0)


class SweepAxis(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    parameter: str
    start: float
    stop: float
    steps: int = Field(..., ge=2)

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


class SweepConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    axes: List[SweepAxis] = Field(..., min_length=1, max_length=2)
    heatmap: bool = True
    workers: Optional[int] = Field(None, ge=1)


class OutputConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    directory: Optional[str] = None
    formats: List[OutputFormat] = [OutputFormat.JSON, OutputFormat.CSV, OutputFormat.SVG, OutputFormat.TXT]


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    parameters: ModelParameters
    simulation: SimulationConfig = SimulationConfig()
    portrait: PortraitConfig = PortraitConfig()
    sweep: Optional[SweepConfig] = None
    output: OutputConfig = OutputConfig()

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            raise ConfigError(f"invalid run configuration: {e}")

    @classmethod
    def from_file(cls, path: str) -> "RunConfig":
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config {path}: {e}")
        return cls.from_dict(data)

    def wants(self, fmt: OutputFormat) -> bool:
        return fmt in self.output.formats

    def normalized(self) -> "RunConfig":
        """Same experiment with N = 1 and every population quantity divided by N."""
        n = self.parameters.n_total
        factor = 1.0 / n

        def rescale_options(opts: IntegratorOptions) -> IntegratorOptions:
            update = {}
            if opts.abs_tol is not None:
                update["abs_tol"] = opts.abs_tol * factor
            if opts.equilibrium_stop_tol is not None:
                update["equilibrium_stop_tol"] = opts.equilibrium_stop_tol * factor
            if opts.bounds is not None:
                update["bounds"] = tuple(b * factor for b in opts.bounds)
            return opts.model_copy(update=update)

        simulation = self.simulation.model_copy(update={
            "initial_states": [state.scaled(factor) for state in self.simulation.initial_states],
            "integrator": rescale_options(self.simulation.integrator),
        })
        portrait = self.portrait.model_copy(update={
            "window": self.portrait.window.scaled(factor) if self.portrait.window else None,
            "integrator": rescale_options(self.portrait.integrator),
        })
        return self.model_copy(update={
            "parameters": self.parameters.with_updates(n_total=1.0),
            "simulation": simulation,
            "portrait": portrait,
        })

import json

import pytest

from analysis.coefficients import reduced_coefficients, validate_parameters
from utils.fixtures import (
    SIMULATION_STUDY,
    fatal_disease_parameters,
    simulation_study_parameters,
    symmetric_parameters,
)

AXIS1 = (5757.575757575758, 0.0)
AXIS2 = (0.0, 7090.909090909091)
N = 10000.0


@pytest.fixture
def study_params():
    return validate_parameters(simulation_study_parameters())


@pytest.fixture
def study_coeffs(study_params):
    return reduced_coefficients(study_params)


@pytest.fixture
def symmetric_params():
    return validate_parameters(symmetric_parameters())


@pytest.fixture
def fatal_params():
    return validate_parameters(fatal_disease_parameters())


@pytest.fixture
def study_config():
    """Run configuration dict around the simulation-study parameters."""
    return {
        "parameters": dict(SIMULATION_STUDY),
        "portrait": {"grid": 2},
        "output": {"formats": ["json", "csv", "svg", "txt"]},
    }


@pytest.fixture
def write_config(tmp_path):
    def _write(data, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def draw_parameters():
    """Random valid parameter sets: rates uniform in [0, 1], mu >= 0.01."""
    def _draw(rng, n_total=N, **fixed):
        data = {name: float(rng.uniform(0.0, 1.0)) for name in
                ("beta1", "beta2", "gamma1", "gamma2", "delta1", "delta2", "alpha1", "alpha2")}
        data["mu"] = float(rng.uniform(0.01, 1.0))
        data["N"] = n_total
        data.update(fixed)
        return validate_parameters(simulation_study_parameters(**data))
    return _draw

# utils/fixtures.py
"""Canonical parameter sets and the published simulation-study values."""

from models.parameters import ModelParameters

# ==============================
# PARAMETER SETS
# ==============================
SIMULATION_STUDY = {
    "alpha1": 0.2, "alpha2": 0.3,
    "beta1": 0.3, "beta2": 0.5,
    "delta1": 0.2, "delta2": 0.3,
    "gamma1": 0.03, "gamma2": 0.04,
    "mu": 0.1, "N": 10000.0,
}


def simulation_study_parameters(**overrides) -> ModelParameters:
    data = dict(SIMULATION_STUDY)
    data.update(overrides)
    return ModelParameters(**data)


def symmetric_parameters() -> ModelParameters:
    """Drug 2 identical to drug 1, equal switchover: a line of equilibria."""
    return simulation_study_parameters(
        beta2=SIMULATION_STUDY["beta1"],
        gamma2=SIMULATION_STUDY["gamma1"],
        delta2=SIMULATION_STUDY["delta1"],
        alpha2=SIMULATION_STUDY["alpha1"],
    )


def fatal_disease_parameters() -> ModelParameters:
    """No recovery and no relapse for either drug."""
    return simulation_study_parameters(gamma1=0.0, gamma2=0.0, delta1=0.0, delta2=0.0)


# ==============================
# PUBLISHED VALUES
# ==============================
PUBLISHED = {
    "axis1": (5757.576, 0.0),
    "axis2": (0.0, 7090.909),
    "origin_jacobian": ((0.19, 0.0), (0.0, 0.39)),
    "theta": (0.29, 0.49),
    "origin_class": "unstable_node",
    "axis1_class": "saddle",
    "axis2_class": "stable_node",
    "axis1_jacobian": ((-0.19, -0.19), (0.0, 0.0733)),
    "axis2_jacobian": ((-0.044, 0.0), (-0.39, -0.39)),
    "feasible_fixed_points": 3,
    "nullclines": 3,
}

# Published axis-point Jacobian entries that disagree with the Jacobian
# formula evaluated on the same parameters (sign patterns agree).
KNOWN_JACOBIAN_MISMATCHES = {
    ("axis1", "j12"),
    ("axis1", "j22"),
    ("axis2", "j11"),
    ("axis2", "j21"),
}

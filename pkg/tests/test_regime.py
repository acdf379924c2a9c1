import pytest

from analysis.coefficients import validate_parameters
from analysis.equilibria import find_equilibria
from analysis.regime import classify_regime, regime_of
from analysis.stability import assess_equilibria
from commands.sweep import check_axes, evaluate_cell, run_sweep, sweep_jobs
from models.equilibrium import EquilibriumKind
from models.parameters import LVCoefficients
from models.regime import RegimeClass
from models.run_config import SweepAxis
from utils.errors import InvalidSweepAxis
from utils.fixtures import simulation_study_parameters


def _regime(**coefficients):
    c = LVCoefficients(n_total=1000.0, **coefficients)
    eq_set = find_equilibria(c)
    return regime_of(eq_set, assess_equilibria(c, eq_set))


@pytest.mark.parametrize("coefficients, expected", [
    (dict(r1=0.2, r2=0.2, a11=0.4, a12=0.1, a21=0.1, a22=0.4), RegimeClass.COEXISTENCE),
    (dict(r1=0.2, r2=0.2, a11=0.4, a12=0.6, a21=0.6, a22=0.4), RegimeClass.BISTABLE_EXCLUSION),
    (dict(r1=0.2, r2=0.2, a11=0.1, a12=-0.5, a21=-0.5, a22=0.1), RegimeClass.NO_STABLE_STATE),
    (dict(r1=0.0, r2=0.2, a11=0.4, a12=0.2, a21=0.3, a22=0.4), RegimeClass.NON_HYPERBOLIC_BOUNDARY),
    (dict(r1=0.39, r2=0.19, a11=0.55, a12=0.45, a21=0.43, a22=0.33), RegimeClass.EXCLUSION_1),
    (dict(r1=0.19, r2=0.39, a11=0.33, a12=0.43, a21=0.45, a22=0.55), RegimeClass.EXCLUSION_2),
    (dict(r1=-0.1, r2=-0.1, a11=0.4, a12=0.1, a21=0.1, a22=0.4), RegimeClass.EXTINCTION),
])
def test_regime_classes(coefficients, expected):
    assert _regime(**coefficients) == expected


def test_simulation_study_excludes_drug_one(study_params):
    report = classify_regime(study_params)
    assert report.regime == RegimeClass.EXCLUSION_2
    assert report.stable_kinds == [EquilibriumKind.AXIS2]


def test_no_initiation_means_extinction():
    report = classify_regime(validate_parameters(simulation_study_parameters(beta1=0.0, beta2=0.0)))
    assert report.regime == RegimeClass.EXTINCTION
    interior = report.equilibria.get(EquilibriumKind.INTERIOR)
    assert interior.location.as_array() == pytest.approx([11000.0, -11000.0], rel=1e-9)
    assert not interior.feasible


def test_identical_drugs_are_degenerate(symmetric_params):
    assert classify_regime(symmetric_params).regime == RegimeClass.DEGENERATE


def test_threshold_origin_is_a_boundary():
    report = classify_regime(validate_parameters(simulation_study_parameters(beta1=0.11)))
    assert report.regime == RegimeClass.NON_HYPERBOLIC_BOUNDARY


def _axes():
    return [SweepAxis(parameter="beta1", start=0.0, stop=0.3, steps=2),
            SweepAxis(parameter="beta2", start=0.0, stop=0.5, steps=2)]


def test_sweep_jobs_are_row_major():
    jobs = sweep_jobs(simulation_study_parameters(), _axes())
    assert [values for _, values in jobs] == [
        {"beta1": 0.0, "beta2": 0.0},
        {"beta1": 0.0, "beta2": 0.5},
        {"beta1": 0.3, "beta2": 0.0},
        {"beta1": 0.3, "beta2": 0.5},
    ]


def test_sweep_regimes():
    rows = run_sweep(simulation_study_parameters(), _axes())
    assert [row.regime for row in rows] == [
        RegimeClass.EXTINCTION,
        RegimeClass.EXCLUSION_2,
        RegimeClass.EXCLUSION_1,
        RegimeClass.EXCLUSION_2,
    ]
    last = rows[-1]
    assert last.feasible_count == 3
    assert last.axis2 == pytest.approx([0.0, 7090.909], abs=1e-3)
    assert last.interior_feasible is False
    assert rows[0].axis1 is None


def test_cell_matches_direct_classification(study_params):
    row = evaluate_cell((simulation_study_parameters(), {"mu": 0.1}))
    assert row.regime == classify_regime(study_params).regime
    assert row.origin_case == "both_above_mu_unstable_node"


def test_parallel_sweep_matches_serial():
    axes = [SweepAxis(parameter="alpha1", start=0.0, stop=1.0, steps=4),
            SweepAxis(parameter="delta2", start=0.1, stop=0.9, steps=3)]
    serial = run_sweep(simulation_study_parameters(), axes, workers=1)
    parallel = run_sweep(simulation_study_parameters(), axes, workers=2)
    assert [r.model_dump() for r in parallel] == [r.model_dump() for r in serial]


@pytest.mark.parametrize("axes", [
    [SweepAxis(parameter="kappa", start=0.0, stop=1.0, steps=3)],
    [SweepAxis(parameter="N", start=0.0, stop=1.0, steps=3)],
    [SweepAxis(parameter="mu", start=0.0, stop=1.5, steps=3)],
    [SweepAxis(parameter="mu", start=-0.1, stop=0.5, steps=3)],
    [SweepAxis(parameter="beta1", start=0.0, stop=0.5, steps=3),
     SweepAxis(parameter="beta1", start=0.1, stop=0.2, steps=3)],
])
def test_invalid_sweep_axes(axes):
    with pytest.raises(InvalidSweepAxis):
        check_axes(axes)


def test_beta2_sweep_through_the_simulation_study():
    rows = run_sweep(simulation_study_parameters(), [SweepAxis(parameter="beta2", start=0.0, stop=1.0, steps=11)])
    assert len(rows) == 11
    assert rows[5].values == {"beta2": pytest.approx(0.5)}
    assert rows[5].regime == RegimeClass.EXCLUSION_2


def test_absent_first_drug_never_excludes_the_second():
    base = simulation_study_parameters(beta1=0.0)
    rows = run_sweep(base, [SweepAxis(parameter="beta2", start=0.0, stop=1.0, steps=11)])
    assert all(row.axis1 is None for row in rows)
    assert not {row.regime for row in rows} & {RegimeClass.EXCLUSION_1, RegimeClass.BISTABLE_EXCLUSION}


def test_switching_rates_leave_the_origin_case_alone():
    axes = [SweepAxis(parameter="alpha1", start=0.0, stop=1.0, steps=5),
            SweepAxis(parameter="alpha2", start=0.0, stop=1.0, steps=5)]
    rows = run_sweep(simulation_study_parameters(), axes)
    assert len(rows) == 25
    assert {row.origin_case for row in rows} == {"both_above_mu_unstable_node"}

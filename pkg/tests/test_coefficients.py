import numpy as np
import pytest
from pydantic import ValidationError

from analysis.coefficients import reduced_coefficients, theta, validate_parameters
from models.parameters import ModelParameters, SpecialCase
from utils.errors import (
    EXIT_VALIDATION,
    NonPositivePopulation,
    RateOutOfRange,
    SingularClosure,
)
from utils.fixtures import simulation_study_parameters


def test_simulation_study_parameters_are_valid_without_flags(study_params):
    assert study_params.flags == ()
    assert study_params.n_total == 10000.0


def test_negative_rate_is_rejected():
    with pytest.raises(RateOutOfRange) as exc:
        validate_parameters(simulation_study_parameters(beta1=-0.1))
    assert exc.value.field == "beta1"
    assert exc.value.exit_code == EXIT_VALIDATION


def test_rate_above_one_is_rejected():
    with pytest.raises(RateOutOfRange):
        validate_parameters(simulation_study_parameters(mu=1.5))


def test_zero_relapse_and_mortality_is_singular():
    with pytest.raises(SingularClosure) as exc:
        validate_parameters(simulation_study_parameters(delta1=0.0, mu=0.0))
    assert exc.value.field == "delta1"


@pytest.mark.parametrize("n_total", [0.0, -10.0])
def test_population_must_be_positive(n_total):
    with pytest.raises(NonPositivePopulation):
        validate_parameters(simulation_study_parameters(N=n_total))


def test_all_problems_are_collected():
    with pytest.raises(RateOutOfRange) as exc:
        validate_parameters(simulation_study_parameters(beta1=-0.1, gamma2=2.0, N=0.0))
    kinds = [type(e) for e in exc.value.errors]
    assert kinds == [RateOutOfRange, RateOutOfRange, NonPositivePopulation]


def test_unknown_keys_are_rejected():
    data = simulation_study_parameters().model_dump(by_alias=True)
    data["kappa"] = 0.1
    with pytest.raises(ValidationError):
        ModelParameters(**data)


def test_population_accepts_alias_and_field_name():
    by_alias = simulation_study_parameters()
    by_name = ModelParameters(**by_alias.model_dump())
    assert by_name == by_alias


def test_revalidating_validated_parameters(study_params):
    again = validate_parameters(study_params)
    assert again == study_params
    assert study_params.raw() == simulation_study_parameters()


def test_special_case_flags():
    p = validate_parameters(simulation_study_parameters(alpha1=0.0, beta2=0.0))
    cases = {(f.case, f.drug) for f in p.flags}
    assert (SpecialCase.ONE_WAY_SWITCHING, 1) in cases
    assert (SpecialCase.DRUG_ABSENT, 2) in cases
    assert (SpecialCase.ZERO_RATE, 1) in cases
    assert (SpecialCase.ZERO_RATE, 2) in cases


def test_fatal_disease_flagged_for_both_drugs(fatal_params):
    drugs = sorted(f.drug for f in fatal_params.flags if f.case == SpecialCase.FATAL_DISEASE)
    assert drugs == [1, 2]
    assert fatal_params.has_flag(SpecialCase.FATAL_DISEASE)


def test_theta_values(study_params):
    assert theta(study_params, 1) == pytest.approx(0.29, abs=1e-12)
    assert theta(study_params, 2) == pytest.approx(0.49, abs=1e-12)


def test_reduced_coefficients_on_simulation_study(study_coeffs):
    c = study_coeffs
    assert (c.r1, c.r2) == pytest.approx((0.19, 0.39), abs=1e-12)
    assert (c.a11, c.a12, c.a21, c.a22) == pytest.approx((0.33, 0.43, 0.45, 0.55), abs=1e-12)
    assert c.n_total == 10000.0


def test_self_competition_positive_iff_drug_present(draw_parameters):
    rng = np.random.default_rng(11)
    for _ in range(200):
        p = draw_parameters(rng, beta1=0.0)
        c = reduced_coefficients(p)
        assert c.a11 == 0.0
        assert c.a22 > 0.0 or p.beta2 == 0.0


def test_cross_competition_sum_is_independent_of_switching(draw_parameters):
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        p = draw_parameters(rng)
        c = reduced_coefficients(p)
        expected = p.beta1 * (1 + p.closure_factor(2)) + p.beta2 * (1 + p.closure_factor(1))
        assert c.a12 + c.a21 == pytest.approx(expected, rel=1e-12, abs=1e-12)

        swapped = reduced_coefficients(validate_parameters(
            p.with_updates(alpha1=float(rng.uniform()), alpha2=float(rng.uniform()))))
        assert swapped.a12 + swapped.a21 == pytest.approx(c.a12 + c.a21, rel=1e-12, abs=1e-12)

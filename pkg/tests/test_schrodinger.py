import math

import numpy as np
import pytest

from specwave import (
    ComplexProfileError,
    Grid,
    InadmissibleExponentError,
    MissingConstantError,
    bargmann_bound,
    bfz_lower,
    classical_constant,
    gaussian,
    lt_constant,
    lt_sum,
    negative_eigenvalues,
    step,
    verify_inequalities,
)

# Square well amplitude -1 on (-1, 1): the even bound state satisfies
# k tan k = sqrt(1 - k^2), equivalently cos k = k, with lambda = k^2 - 1.
SQUARE_WELL_K = 0.739085133215161
SQUARE_WELL_LAMBDA = -0.453753165860328


def test_square_well_oracle_self_consistency():
    k = SQUARE_WELL_K
    assert math.cos(k) == pytest.approx(k, abs=1e-15)
    assert k * math.tan(k) == pytest.approx(math.sqrt(1 - k * k), abs=1e-14)
    assert SQUARE_WELL_LAMBDA == pytest.approx(k * k - 1.0, abs=1e-15)


def test_constant_admissibility():
    for gamma, d in ((0.3, 1), (0.0, 1), (0.0, 2), (-0.5, 3)):
        with pytest.raises(InadmissibleExponentError):
            lt_constant(gamma, d)
    with pytest.raises(ValueError):
        lt_constant(1.0, 0)


def test_constant_values_and_provenance():
    sharp = lt_constant(0.5, 1)
    assert sharp.value == 0.5 and sharp.provenance == "sharp_known"
    cls = lt_constant(1.5, 1)
    # Gamma(5/2) / (2 sqrt(pi) Gamma(3)) = 3/16 exactly.
    assert cls.value == pytest.approx(3.0 / 16.0, abs=1e-15)
    assert cls.provenance == "classical"
    user = lt_constant(1.0, 1, user_value=0.8)
    assert user.value == 0.8 and user.provenance == "user_supplied"
    with pytest.raises(MissingConstantError):
        lt_constant(1.0, 1)


def test_classical_constant_formula():
    # d = 3, gamma = 1: Gamma(2) / (8 pi^{3/2} Gamma(7/2)).
    expected = 1.0 / (8.0 * math.pi**1.5 * math.gamma(3.5))
    assert classical_constant(1.0, 3) == pytest.approx(expected, rel=1e-14)


def test_square_well_ground_state():
    g = Grid(30.0, 1500)
    s = negative_eigenvalues(step(-1.0, 1.0), g)
    assert s.count == 1
    assert s.eigenvalues[0] == pytest.approx(SQUARE_WELL_LAMBDA, abs=1e-3)


def test_inequality_suite_on_square_well():
    g = Grid(30.0, 1500)
    report = verify_inequalities(step(-1.0, 1.0), 0.5, g)
    assert report.all_pass
    by_name = {c.name: c for c in report.checks}
    riesz = by_name["riesz_sum_upper"]
    # sqrt-sum 0.6737 against the sharp bound (1/2)*2 = 1.
    assert riesz.lhs == pytest.approx(math.sqrt(-SQUARE_WELL_LAMBDA), abs=1e-3)
    assert riesz.rhs == pytest.approx(1.0)
    assert riesz.constants == {
        "gamma": 0.5,
        "L_value": 0.5,
        "provenance": "sharp_known",
    }
    trace = by_name["trace_formula_lower"]
    assert trace.lhs == pytest.approx(0.5)  # -(1/4) integral(V) = 1/2
    count = by_name["bargmann_count"]
    assert count.lhs == 1.0 and count.rhs == 2.0


def test_bargmann_bound_uses_integer_part():
    g = Grid(30.0, 1500)
    report = verify_inequalities(step(-2.0, 1.5), 0.5, g)
    by_name = {c.name: c for c in report.checks}
    cap, err = bargmann_bound(step(-2.0, 1.5))
    assert by_name["bargmann_count"].rhs == math.floor(cap)
    assert err == 0.0


def test_trace_check_skipped_for_net_repulsive_potential():
    g = Grid(20.0, 800)
    report = verify_inequalities(step(1.0, 1.0), 0.5, g)
    by_name = {c.name: c for c in report.checks}
    trace = by_name["trace_formula_lower"]
    assert trace.passed and "not applicable" in trace.note
    assert report.all_pass


def test_deeper_wells_still_pass():
    g = Grid(30.0, 2000)
    for a in (step(-25.0, 2.0), gaussian(-4.0, 1.2)):
        report = verify_inequalities(a, 0.5, g)
        assert report.all_pass, [c.name for c in report.failures]


def test_gamma_three_halves_riesz_sum():
    g = Grid(30.0, 2000)
    report = verify_inequalities(step(-25.0, 2.0), 1.5, g)
    assert report.all_pass


def test_bfz_lower_closed_form():
    val, err = bfz_lower(step(-1.0, 1.0))
    assert val == 0.5 and err == 0.0
    with pytest.raises(ComplexProfileError):
        bfz_lower(step(1j, 1.0))


def test_lt_sum_counting_mode():
    g = Grid(20.0, 800)
    s = negative_eigenvalues(step(-8.0, 1.0), g)
    assert lt_sum(s, 0.0) == float(s.count)
    with pytest.raises(ValueError):
        lt_sum(s, -1.0)


def test_negative_eigenvalues_validation():
    g = Grid(10.0, 200)
    with pytest.raises(ComplexProfileError):
        negative_eigenvalues(step(1j, 1.0), g)
    with pytest.raises(ValueError):
        negative_eigenvalues(step(-1.0, 1.0), g, epsilon=-1.0)


def test_no_bound_states_above_cutoff_for_weak_well():
    # Shallow well: the ground level sits above the epsilon cutoff, so the
    # reported count is zero rather than a box artifact.
    g = Grid(30.0, 1500)
    s = negative_eigenvalues(step(-0.01, 0.5), g)
    assert s.count == 0

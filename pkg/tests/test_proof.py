import json
from fractions import Fraction

import pytest
import sympy

from fppkit.proof import (
    GROUPS,
    LocalMultiplicityProfile,
    c_square_values,
    claim_enumeration,
    invariant_curve_multiple,
    kc_nonneg_fiber_argument,
    representable,
    rotated_multiplicity_sum,
    verify_paper,
)
from fppkit.report import AXIOM, FAIL, PASS
from fppkit.surface import preset

P = LocalMultiplicityProfile
TWO_POINT = {(1, 2), (1, 3), (2, 3)}


def test_profile_square_matches_sympy():
    m = sympy.Matrix([[-2, 1], [1, -2]])
    for a in range(6):
        for b in range(6):
            c = sympy.Matrix([sympy.Rational(2 * a + b, 3), sympy.Rational(a + 2 * b, 3)])
            expected = (c.T * m * c)[0]
            assert P(a, b).square == Fraction(int(expected.p), int(expected.q))
            assert P(a, b).square == P(a, b).closed_form_square


def test_profile_coefficients_solve_the_intersections():
    # C_k . A_k1 = -a, C_k . A_k2 = -b for C_k = c1 A_k1 + c2 A_k2
    for a in range(5):
        for b in range(5):
            c1, c2 = P(a, b).coefficients
            assert -2 * c1 + c2 == -a and c1 - 2 * c2 == -b


def test_square_never_integral_after_shift():
    for a in range(10):
        for b in range(10):
            assert (Fraction(4, 3) + P(a, b).square).denominator == 3


def test_square_values():
    assert c_square_values(4) == [Fraction(-2, 3), -2, Fraction(-8, 3), Fraction(-14, 3)]
    values = {P(a, b).closed_form_square for a in range(4) for b in range(4) if 1 <= a + b <= 3}
    assert values == {Fraction(-2, 3), -2, Fraction(-8, 3), Fraction(-14, 3), -6}


def test_multiplicity_bounds():
    assert [P(0, 0).mult_lower_bound, P(1, 0).mult_lower_bound, P(1, 1).mult_lower_bound, P(3, 0).mult_lower_bound] == [0, 1, 2, 2]
    assert rotated_multiplicity_sum((P(1, 0), P(0, 1), P(0, 0))) == 1
    assert rotated_multiplicity_sum((P(1, 1), P(2, 0), P(0, 0))) == 4
    with pytest.raises(ValueError):
        P(-1, 0)


def test_claim_enumeration_counts():
    # frozen after one run; survivors grow with the bound
    counts = {b: len(claim_enumeration(b).survivors) for b in (2, 3, 5)}
    assert counts == {2: 108, 3: 300, 5: 1728}
    r = claim_enumeration(2)
    assert len(r.survivors) + r.rejected_integrality + r.rejected_multiplicity == 9 ** 3


@pytest.mark.parametrize("bound", [2, 3, 5])
def test_claim_support_is_two_points(bound):
    r = claim_enumeration(bound)
    assert r.support_patterns == TWO_POINT
    for t in r.survivors:
        assert r.proper_square(t).denominator == 1


def test_simple_pair_survives_with_zero_square():
    r = claim_enumeration(2)
    t = (P(1, 0), P(0, 1), P(0, 0))
    assert t in r.survivors and r.proper_square(t) == 0
    assert (P(1, 0), P(1, 0), P(1, 0)) not in r.survivors


def test_claim_bound_validation():
    with pytest.raises(ValueError):
        claim_enumeration(1)


def test_invariant_curve_multiple():
    assert invariant_curve_multiple(4, 7, Fraction(9, 7)) == Fraction(2, 3)
    assert invariant_curve_multiple(4, 3, Fraction(3)) == Fraction(2, 3)
    with pytest.raises(ArithmeticError):
        invariant_curve_multiple(4, 7, Fraction(1))


def test_representable():
    assert representable(2, [1])
    assert not representable(2, [3, 4, 6])
    assert representable(9, [3, 6])
    assert not representable(0, [1])


@pytest.mark.parametrize("case", [(2, 3), (2, 4), (3, 3)])
def test_kc_argument(case):
    arg = kc_nonneg_fiber_argument(case)
    assert arg.kc_bound == Fraction(6, 7)
    assert arg.kc_value == 0
    assert min(arg.component_classes.values()) >= 3
    assert not arg.two_representable


def test_report_structure():
    report = verify_paper()
    assert report.status == PASS
    assert len(report.checks) >= 35
    assert all(c.anchor for c in report.checks)
    assert len({c.name for c in report.checks}) == len(report.checks)
    assert {c.group for c in report.checks} == set(GROUPS)
    assert {c.status for c in report.checks} <= {PASS, AXIOM}
    assert sum(c.status == AXIOM for c in report.checks) == 3


def test_report_is_deterministic():
    assert verify_paper().to_json() == verify_paper().to_json()
    doc = json.loads(verify_paper().to_json())
    assert set(doc) == {"checks", "status"}
    assert {"name", "anchor", "status", "expected", "computed"} <= set(doc["checks"][0])


def test_only_filter():
    report = verify_paper(only="hj")
    assert report.checks and {c.group for c in report.checks} == {"hj"}
    with pytest.raises(ValueError):
        verify_paper(only="nope")


def test_mutated_model_fails():
    y = preset("X/C7").with_point("y1", 5, 2)
    report = verify_paper(model_y=y)
    assert report.status == FAIL
    failed = {c.group for c in report.checks if c.status == FAIL}
    assert "surface" in failed and "formula" in failed

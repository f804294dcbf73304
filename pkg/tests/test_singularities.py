from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from fppkit.singularities import (
    SingularMatrixError,
    SingularityType,
    chain_determinant,
    discrepancy,
    discrepancy_by_linear_solve,
    intersection_matrix,
    local_discriminant_order,
    solve_tridiagonal,
)
from oracles import all_strings, chain_matrix
from oracles import discrepancy as oracle_discrepancy

STRINGS = list(all_strings())


def test_order7_point():
    d = discrepancy(SingularityType(7, 5))
    assert d.coefficients == (Fraction(1, 7), Fraction(2, 7), Fraction(3, 7))
    assert d.dpk == Fraction(3, 7)


def test_a2_point_is_crepant():
    d = discrepancy(SingularityType(3, 2))
    assert d.coefficients == (0, 0)
    assert d.dpk == 0 and d.dp2 == 0


def test_five_two_point():
    # 3 a1 - a2 = 1, -a1 + 2 a2 = 0 gives a1 = 2/5, a2 = 1/5
    d = discrepancy(SingularityType(5, 2))
    assert d.coefficients == (Fraction(2, 5), Fraction(1, 5))
    assert oracle_discrepancy((3, 2)) == d.coefficients


def test_closed_form_matches_oracle_on_family():
    for s in STRINGS:
        p = SingularityType.from_string(s)
        d = discrepancy(p)
        assert d.coefficients == oracle_discrepancy(s), s
        assert d == discrepancy_by_linear_solve(p)


def test_dp_square_equals_minus_dpk():
    # D_p^2 = D_p.(K - sum) and D_p.A_j = 2 + A_j^2 imply D_p^2 = -D_p.K
    for s in STRINGS:
        d = discrepancy(SingularityType.from_string(s))
        assert d.dp2 == -d.dpk


def test_determinant_is_order():
    for s in STRINGS:
        q = SingularityType.from_string(s).q
        assert abs(chain_determinant(s)) == q
        assert abs(int(chain_matrix(s).det())) == q
        assert local_discriminant_order(SingularityType.from_string(s)) == q


def test_intersection_matrix_shape():
    assert intersection_matrix((2, 2, 3)) == [[-2, 1, 0], [1, -2, 1], [0, 1, -3]]


@given(st.lists(st.integers(2, 9), min_size=1, max_size=6), st.data())
def test_tridiagonal_matches_sympy(diag, data):
    # diagonally dominant, so no pivoting is needed
    n = len(diag)
    sub = [0] + data.draw(st.lists(st.sampled_from([-1, 0, 1]), min_size=n - 1, max_size=n - 1))
    sup = data.draw(st.lists(st.sampled_from([-1, 0, 1]), min_size=n - 1, max_size=n - 1)) + [0]
    sign = data.draw(st.sampled_from([-1, 1]))
    diag = [sign * x for x in diag]
    rhs = data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))
    m = sympy.Matrix(n, n, lambda i, j: diag[i] if i == j else sub[i] if j == i - 1 else sup[i] if j == i + 1 else 0)
    expected = m.LUsolve(sympy.Matrix(rhs))
    got = solve_tridiagonal(sub, diag, sup, rhs)
    assert [Fraction(int(x.p), int(x.q)) for x in expected] == list(got)


def test_tridiagonal_zero_pivot():
    with pytest.raises(SingularMatrixError):
        solve_tridiagonal([0, 1], [1, 1], [1, 0], [1, 1])


def test_singularity_validation():
    with pytest.raises(ValueError):
        SingularityType(6, 4)
    with pytest.raises(ValueError):
        SingularityType(1, 0)
    p = SingularityType(7, 5, "y1")
    assert p.relabel("y2").label == "y2" and p.relabel("y2").string == p.string
    assert SingularityType.from_string((2, 2, 3)) == SingularityType(7, 5)

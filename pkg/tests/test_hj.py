from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fppkit.hj import HJString, hj_eval, hj_expand, parse_fraction_arg, uv_sequences
from oracles import all_strings, nested_value

STRINGS = list(all_strings())


def test_family_size():
    assert len(STRINGS) == 4 + 16 + 64 + 256 + 1024


def test_known_values():
    assert hj_eval([2, 2, 3]) == Fraction(7, 5)
    assert hj_expand(7, 5).entries == (2, 2, 3)
    assert hj_expand(3, 2).entries == (2, 2)
    assert hj_expand(5, 2).entries == (3, 2)
    assert hj_expand(7, 3).entries == (3, 2, 2)
    assert hj_expand(5, 1).entries == (5,)


def test_eval_matches_oracle_on_family():
    for s in STRINGS:
        assert hj_eval(s) == nested_value(s), s


def test_round_trip_on_family():
    for s in STRINGS:
        v = hj_eval(s)
        assert hj_expand(v.numerator, v.denominator).entries == s


@given(st.integers(2, 400).flatmap(lambda q: st.tuples(st.just(q), st.integers(1, q - 1))))
def test_expand_round_trip_coprime(qa):
    q, a = qa
    if Fraction(q, a).denominator != a:
        with pytest.raises(ValueError):
            hj_expand(q, a)
        return
    s = hj_expand(q, a)
    assert s.value == Fraction(q, a)
    assert all(n >= 2 for n in s.entries)


def test_uv_tables():
    uv = uv_sequences([2, 2, 3])
    assert uv.u == (0, 1, 2, 3, 7)
    assert uv.v == (7, 5, 3, 1, 0)
    assert uv.q == 7


def test_uv_endpoints_and_recurrences():
    for s in STRINGS:
        uv = uv_sequences(s)
        q = hj_eval(s).numerator
        assert uv.u[-1] == uv.v[0] == q
        # u_j v_{j+1} - u_{j+1} v_j = -q for consecutive indices
        for j in range(len(s) + 1):
            assert uv.u[j + 1] * uv.v[j] - uv.u[j] * uv.v[j + 1] == q


@pytest.mark.parametrize("bad", [[], [1], [2, 1, 3], [0]])
def test_invalid_strings(bad):
    with pytest.raises(ValueError):
        HJString(tuple(bad))


@pytest.mark.parametrize("q,a", [(7, 0), (7, 7), (6, 4), (1, 1), (-5, 2)])
def test_invalid_expand(q, a):
    with pytest.raises(ValueError):
        hj_expand(q, a)


def test_parse_fraction_arg():
    assert parse_fraction_arg("7/5") == (7, 5)
    with pytest.raises(ValueError):
        parse_fraction_arg("7.5")

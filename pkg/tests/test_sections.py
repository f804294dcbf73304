import pytest
from hypothesis import given, settings, strategies as st

from fppkit.proof import QUARTIC_MONOMIALS, order3_pattern, order7_pattern
from fppkit.sections import (
    InconclusiveElimination,
    VanishingPattern,
    cyclic_pattern,
    max_certified,
    monomial_name,
    parse_monomial,
    section_independence,
)

POINTS = ("x1", "x2", "x3")


def test_order7_trace():
    cert = section_independence(order7_pattern(), QUARTIC_MONOMIALS)
    assert cert.describe() == ["x3 kills g1^2", "x1 kills g2^2", "x2 kills g3^2", "remainder g1g2 independent"]
    assert cert.independent == 4


def test_order3_trace():
    cert = section_independence(order3_pattern(), QUARTIC_MONOMIALS)
    assert cert.describe() == ["x3 kills g1^2", "x2 kills g2^2", "x1 kills g3^2", "remainder g1g2 independent"]
    assert cert.independent == 4


def test_max_certified():
    assert max_certified(order7_pattern()) == 4
    assert max_certified(order3_pattern()) == 4


def test_stall_is_inconclusive_not_dependent():
    pattern = VanishingPattern(POINTS, (("g1", {"x1"}), ("g2", {"x1"})))
    with pytest.raises(InconclusiveElimination) as info:
        section_independence(pattern, [("g1", "g1"), ("g2", "g2")])
    assert len(info.value.remaining) == 2


def test_single_section_allowed():
    pattern = VanishingPattern(POINTS, (("g1", {"x1"}),))
    assert section_independence(pattern).independent == 1


patterns = st.lists(
    st.sets(st.sampled_from(POINTS), max_size=2), min_size=1, max_size=3
).map(lambda zs: VanishingPattern(POINTS, tuple((f"g{i + 1}", z) for i, z in enumerate(zs))))


@settings(deadline=None, max_examples=60)
@given(patterns, st.sets(st.sampled_from(POINTS), max_size=2))
def test_adding_a_section_never_lowers_the_certificate(pattern, zeros):
    bigger = pattern.with_section("h", zeros)
    assert max_certified(bigger) >= max_certified(pattern)


@given(patterns)
def test_certificate_is_consistent(pattern):
    try:
        cert = section_independence(pattern)
    except InconclusiveElimination as exc:
        assert len(exc.remaining) >= 2
        return
    # each killing point sees exactly the killed product among those still alive
    alive = list(cert.monomials)
    for point, mono in cert.trace:
        assert [m for m in alive if pattern.nonzero_at(m, point)] == [mono]
        alive.remove(mono)
    assert alive == ([cert.remainder] if cert.remainder else [])


def test_validation():
    with pytest.raises(ValueError):
        VanishingPattern(POINTS, (("g1", {"x1", "x2", "x3"}),))
    with pytest.raises(ValueError):
        VanishingPattern(POINTS, (("g1", {"x9"}),))
    with pytest.raises(ValueError):
        VanishingPattern(POINTS, (("g1", set()), ("g1", set())))
    with pytest.raises(KeyError):
        section_independence(order7_pattern(), [("g1", "g9")])


def test_monomial_names():
    names = ["g1", "g2", "g3"]
    assert monomial_name(("g1", "g1")) == "g1^2"
    assert monomial_name(("g1", "g2")) == "g1g2"
    assert parse_monomial("g3^2", names) == ("g3", "g3")
    assert parse_monomial("g1g3", names) == ("g1", "g3")
    with pytest.raises(ValueError):
        parse_monomial("g4^2", names)


def test_cyclic_pattern_shape():
    p = cyclic_pattern(POINTS, ["g1", "g2", "g3"])
    assert p.zeros("g1") == {"x1", "x2"} and p.zeros("g3") == {"x3", "x1"}

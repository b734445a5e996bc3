import pytest
from hypothesis import given, strategies as st

from cliffcat.laurent import LaurentZ, LaurentZH, format_laurent


def lz(draw_dict):
    return LaurentZ(draw_dict)


laurents = st.dictionaries(
    st.integers(-6, 6), st.integers(-9, 9), max_size=5
).map(LaurentZ)

laurents_qh = st.dictionaries(
    st.tuples(st.integers(-5, 5), st.integers(-3, 3)),
    st.integers(-9, 9),
    max_size=5,
).map(LaurentZH)


@given(laurents, laurents, laurents)
def test_ring_axioms_q(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LaurentZ() == a
    assert a * LaurentZ.unit() == a
    assert a + (-a) == LaurentZ()


@given(laurents_qh, laurents_qh, laurents_qh)
def test_ring_axioms_qh(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * LaurentZH.unit() == a


@given(laurents_qh, laurents_qh)
def test_specialize_is_ring_map(a, b):
    assert (a + b).specialize_h(-1) == a.specialize_h(-1) + b.specialize_h(-1)
    assert (a * b).specialize_h(-1) == a.specialize_h(-1) * b.specialize_h(-1)


def test_specialize_values():
    one_plus_h = LaurentZH.unit() + LaurentZH.monomial(0, 1)
    assert not one_plus_h.specialize_h(-1)
    assert one_plus_h.specialize_h(1) == LaurentZ({0: 2})
    assert LaurentZH.monomial(2, -1).specialize_h(-1) == LaurentZ({2: -1})
    with pytest.raises(ValueError):
        LaurentZH.unit().specialize_h(2)


@given(laurents)
def test_json_round_trip_q(a):
    assert LaurentZ.from_json(a.to_json()) == a


@given(laurents_qh)
def test_json_round_trip_qh(a):
    assert LaurentZH.from_json(a.to_json()) == a


def test_formatting():
    assert str(LaurentZ()) == "0"
    assert str(LaurentZ({0: 1})) == "1"
    assert str(LaurentZ({1: 1, -1: 1})) == "q^-1 + q"
    assert str(LaurentZ({2: -1, 0: 3})) == "3 - q^2"
    assert str(LaurentZH.monomial(1, -1)) == "q*h^-1"
    assert format_laurent([((0, 2), -2)], ("q", "h")) == "-2*h^2"


def test_int_comparison():
    assert LaurentZ({0: 5}) == 5
    assert LaurentZ() == 0
    assert LaurentZH.unit() == 1

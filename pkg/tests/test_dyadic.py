from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from snortcgt.dyadic import Dyadic

dyadics = st.builds(Dyadic, st.integers(-10**6, 10**6), st.integers(0, 20))


def test_reduced_form():
    d = Dyadic(12, 3)
    assert (d.numerator, d.exponent) == (3, 1)
    assert Dyadic(8, 3) == 1
    assert Dyadic(3, -2) == 12


@pytest.mark.parametrize("text,num,exp", [("3", 3, 0), ("-13/4", -13, 2), ("6/8", 3, 2), (" 1 / 2 ", 1, 1)])
def test_parse(text, num, exp):
    d = Dyadic.parse(text)
    assert (d.numerator, d.exponent) == (num, exp)


@pytest.mark.parametrize("bad", ["1/3", "x", "1/0", ""])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Dyadic.parse(bad)


def test_str():
    assert str(Dyadic(-13, 2)) == "-13/4"
    assert str(Dyadic(11, 1)) == "11/2"
    assert str(Dyadic(0)) == "0"


def test_from_fraction_rejects_non_dyadic():
    with pytest.raises(ValueError):
        Dyadic.from_fraction(Fraction(1, 6))


def test_immutable():
    with pytest.raises(AttributeError):
        Dyadic(1).numerator = 2


def test_div_small():
    assert Dyadic(3).div_small(4) == Dyadic(3, 2)
    assert Dyadic(3).div_small(-2) == Dyadic(-3, 1)
    with pytest.raises(ValueError):
        Dyadic(3).div_small(3)


@given(dyadics, dyadics)
def test_arithmetic_matches_fraction(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a + b).to_fraction() == fa + fb
    assert (a - b).to_fraction() == fa - fb
    assert (a * b).to_fraction() == fa * fb
    assert a.average(b).to_fraction() == (fa + fb) / 2
    assert (a < b) == (fa < fb)
    assert (a == b) == (fa == fb)
    assert a.floor() == fa.__floor__()


@given(dyadics)
def test_roundtrip_and_hash(a):
    assert Dyadic.parse(str(a)) == a
    assert Dyadic.from_fraction(a.to_fraction()) == a
    if a.is_integer():
        assert hash(a) == hash(int(a))
    assert hash(a) == hash(a.to_fraction())

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from linbialg.errors import GradedIndeterminateUnsupported, NotAUnit, ParseError, ScalarKindMismatch
from linbialg.scalars import (FUZZY, FUZZY_I, GF, NEUTROSOPHIC, RATIONAL, Fuzzy, I, Neutro, format_neutro,
                              fuzzy_max, fuzzy_min, gf, kind_from_name, neutro_inverse, neutro_split,
                              neutro_unsplit, parse_fuzzy, parse_neutro)
from strategies import neutro


def test_gf_arithmetic_and_inverse():
    F7 = GF(7)
    assert F7(3) * F7(5) == F7(1)
    assert F7(3).inverse() == F7(5)
    assert F7(2) - F7(5) == F7(4)
    assert F7(3) ** 6 == F7(1)
    with pytest.raises(ZeroDivisionError):
        F7(0).inverse()


def test_gf_rejects_mixed_fields_and_composite_moduli():
    with pytest.raises(ScalarKindMismatch):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ParseError):
        kind_from_name("gf:9")


def test_kind_lookup_and_parsing():
    assert kind_from_name("rational") is RATIONAL
    assert kind_from_name("gf:11") is gf(11)
    assert RATIONAL.parse("-3/4") == Fraction(-3, 4)
    assert gf(5).parse("7") == GF(5)(2)
    with pytest.raises(ParseError):
        kind_from_name("complex")


def test_neutro_indeterminate_is_idempotent():
    assert I * I == I
    assert (2 + 3 * I) * (1 - I) == Neutro(2, -2)


def test_neutro_format_round_trip():
    for text in ["2-4I", "I", "-I", "1/2+3/4I", "0", "-5", "12+2I"]:
        assert format_neutro(parse_neutro(text)) == text
    with pytest.raises(ParseError):
        parse_neutro("2+x")


def test_neutro_units():
    assert neutro_inverse(Neutro(2, 1)) * Neutro(2, 1) == Neutro(1)
    # a + bI is a unit iff a != 0 and a + b != 0
    with pytest.raises(NotAUnit):
        neutro_inverse(Neutro(1, -1))
    with pytest.raises(NotAUnit):
        neutro_inverse(I)


@given(neutro, neutro, neutro)
def test_split_is_a_ring_isomorphism(x, y, z):
    def sp(v):
        return neutro_split(v)

    assert neutro_unsplit(*sp(x)) == x
    assert sp(x + y) == tuple(a + b for a, b in zip(sp(x), sp(y)))
    assert sp(x * y) == tuple(a * b for a, b in zip(sp(x), sp(y)))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


def test_fuzzy_parse_format():
    assert str(parse_fuzzy("0.5")) == "0.5"
    assert parse_fuzzy("I") is FUZZY_I or parse_fuzzy("I") == FUZZY_I
    assert str(parse_fuzzy("0.25I")) == "0.25I"
    with pytest.raises(ParseError):
        parse_fuzzy("1.5")
    with pytest.raises(ParseError):
        parse_fuzzy("0.1234567")


def test_fuzzy_indeterminate_rules():
    half = Fuzzy.real("0.5")
    zero, one = Fuzzy.real(0), Fuzzy.real(1)
    assert fuzzy_min(zero, FUZZY_I) == zero
    assert fuzzy_min(half, FUZZY_I) == FUZZY_I
    assert fuzzy_max(one, FUZZY_I) == one
    assert fuzzy_max(half, FUZZY_I) == FUZZY_I
    with pytest.raises(GradedIndeterminateUnsupported):
        fuzzy_min(parse_fuzzy("0.5I"), half)


def test_fuzzy_distributivity_fails_with_indeterminate():
    a, b, c = Fuzzy.real("0.3"), FUZZY_I, Fuzzy.real(1)
    left = fuzzy_min(a, fuzzy_max(b, c))
    right = fuzzy_max(fuzzy_min(a, b), fuzzy_min(a, c))
    assert left == a
    assert right == FUZZY_I


grades = st.sampled_from(["0", "0.2", "0.5", "0.7", "1", "I"]).map(parse_fuzzy)


@given(grades, grades, grades)
def test_fuzzy_lattice_laws_that_do_hold(x, y, z):
    assert fuzzy_min(x, y) == fuzzy_min(y, x)
    assert fuzzy_max(x, y) == fuzzy_max(y, x)
    assert fuzzy_min(x, x) == x
    assert fuzzy_min(fuzzy_min(x, y), z) == fuzzy_min(x, fuzzy_min(y, z))
    assert fuzzy_max(fuzzy_max(x, y), z) == fuzzy_max(x, fuzzy_max(y, z))


def test_kind_formatting():
    assert NEUTROSOPHIC.format(Neutro(0, -1)) == "-I"
    assert FUZZY.format(FUZZY_I) == "I"
    assert RATIONAL.format(Fraction(-1, 6)) == "-1/6"

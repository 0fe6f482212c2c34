from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from algact.errors import (
    CharTwoForbidden,
    DivisionByZero,
    FieldMismatch,
    NotPrime,
)
from algact.fields import Field, GF, Q, make_field, scalar_arith


def test_make_field_rationals():
    assert make_field("Q") is Q
    assert Q.to_json() == "Q"


def test_make_field_odd_prime():
    f = make_field("Fp", 3)
    assert f.p == 3
    assert f.to_json() == {"p": 3}


def test_char_two_rejected():
    with pytest.raises(CharTwoForbidden):
        GF(2)


@pytest.mark.parametrize("p", [1, 4, 9, 15, 561])
def test_not_prime_rejected(p):
    with pytest.raises(NotPrime):
        GF(p)


def test_scalar_arith_examples():
    assert scalar_arith(Q, "mul", Fraction(1, 2), Fraction(2, 3)) == Fraction(1, 3)
    assert scalar_arith(GF(5), "inv", 2) == 3
    with pytest.raises(DivisionByZero):
        scalar_arith(Q, "div", Fraction(1), Fraction(0))


def test_scalar_arith_field_mismatch():
    with pytest.raises(FieldMismatch):
        scalar_arith(GF(5), "add", 3, Fraction(1, 2))
    with pytest.raises(FieldMismatch):
        scalar_arith(GF(5), "add", 7, 1)  # out of canonical range


def test_field_json_roundtrip():
    for f in (Q, GF(3), GF(97)):
        assert Field.from_json(f.to_json()) == f


def test_prime_field_parse_fraction():
    f = GF(7)
    assert f.of(Fraction(1, 2)) == 4  # 2 * 4 = 8 = 1 mod 7
    with pytest.raises(DivisionByZero):
        f.of(Fraction(1, 7))


rationals = st.fractions(
    min_value=Fraction(-(10**6)), max_value=Fraction(10**6), max_denominator=10**4
)
residues5 = st.integers(min_value=0, max_value=4)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert Q.add(a, b) == Q.add(b, a)
    assert Q.mul(a, b) == Q.mul(b, a)
    assert Q.mul(a, Q.add(b, c)) == Q.add(Q.mul(a, b), Q.mul(a, c))
    assert Q.add(Q.add(a, b), c) == Q.add(a, Q.add(b, c))
    if a != 0:
        assert Q.mul(a, Q.inv(a)) == 1


@given(residues5, residues5, residues5)
def test_prime_field_axioms(a, b, c):
    f = GF(5)
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(f.add(a, b), c) == f.add(f.mul(a, c), f.mul(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    if a != 0:
        assert f.mul(a, f.inv(a)) == 1


@given(rationals)
def test_canonicalization_idempotent(a):
    v = Q.of(Q.of(a))
    assert v == a
    assert v.denominator > 0
    # str form parses back to the same value
    assert Q.of(Q.to_str(v)) == v


@given(st.integers())
def test_residue_canonicalization(k):
    f = GF(11)
    v = f.of(k)
    assert 0 <= v < 11
    assert f.of(f.to_str(v)) == v

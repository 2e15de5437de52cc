from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signedtutte.poly import (
    ONE,
    X,
    Y,
    Z,
    NotDivisibleError,
    PolyError,
    TriPoly,
    pow_binomial,
)

monos = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monos, st.integers(-5, 5), max_size=5).map(TriPoly)
rats = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def test_binomial_examples():
    assert pow_binomial("X", 1) == X - 1
    assert pow_binomial("Y", 2) == Y * Y - 2 * Y + 1
    assert (X - 1) * (Z - 1) + (Z - 1) == X * Z - X
    assert pow_binomial("Z", 0) == ONE
    with pytest.raises(PolyError):
        pow_binomial("Z", -1)


def test_no_zero_coefficients_stored():
    p = X - X + Y
    assert p.terms == {(0, 1, 0): 1}
    assert (X - X).is_zero()


def test_eval_examples():
    assert Z.eval(5, 7, Fraction(1, 2)) == Fraction(1, 2)
    hc = (Y - Z) * (Z - 1) + X * Z * Z
    assert hc.eval(0, -1, -1) == 0
    assert hc.eval(0, -2, 0) == 2


def test_division_examples():
    assert ((Z - 1) * X).divide_by_binomial("Z", 1) == X
    with pytest.raises(NotDivisibleError):
        X.divide_by_binomial("Z", 1)
    with pytest.raises(NotDivisibleError):
        ((Z - 1) * X).divide_by_binomial("Z", 2)


def test_substitute_z():
    p = X * Z * Z + Y
    assert p.substitute_z(2) == 4 * X + Y
    with pytest.raises(PolyError):
        p.substitute_z(Fraction(1, 2))


def test_render_is_graded_lex():
    hc = (Y - Z) * (Z - 1) + X * Z * Z
    assert hc.render() == "X*Z^2 + Y*Z - Z^2 - Y + Z"
    assert TriPoly().render() == "0"
    assert (-3 * X * X).render() == "-3*X^2"


@settings(max_examples=150, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p and p * q == q * p
    assert p - p == TriPoly()


@settings(max_examples=150, deadline=None)
@given(polys, polys, rats, rats, rats)
def test_eval_is_a_homomorphism(p, q, x, y, z):
    assert (p * q).eval(x, y, z) == p.eval(x, y, z) * q.eval(x, y, z)
    assert (p + q).eval(x, y, z) == p.eval(x, y, z) + q.eval(x, y, z)


@settings(max_examples=150, deadline=None)
@given(polys)
def test_render_parse_round_trip(p):
    assert TriPoly.parse(p.render()) == p


@settings(max_examples=100, deadline=None)
@given(polys, st.integers(0, 3))
def test_divide_inverts_multiply(p, k):
    assert (p * pow_binomial("Z", k)).divide_by_binomial("Z", k) == p


@settings(max_examples=100, deadline=None)
@given(polys, rats, rats, rats)
def test_substitute_rational_matches_eval(p, x, y, z):
    # Z -> X / (X - 1)
    if x == 1:
        return
    num, den = p.substitute_rational({"Z": (X, X - 1)})
    assert num.eval(x, y, z) / den.eval(x, y, z) == p.eval(x, y, x / (x - 1))


def test_parse_errors():
    for bad in ("", "X^", "2**X", "W"):
        with pytest.raises(PolyError):
            TriPoly.parse(bad)

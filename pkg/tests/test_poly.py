from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import RING3, polynomials
from waci.poly import (
    ParseError,
    Polynomial,
    Presentation,
    PresentationError,
    RingMismatchError,
    WeightedRing,
    arith,
    is_weighted_homogeneous,
    linear_part,
    mono_mul,
    parse,
    weighted_degree,
)

R = WeightedRing(("x1", "x2", "x3"), (2, 2, 2))


def P(text, ring=R):
    return parse(text, ring)


def test_ring_validation():
    with pytest.raises(ValueError):
        WeightedRing(("x",), (3,))
    with pytest.raises(ValueError):
        WeightedRing(("x", "x"), (2, 2))
    with pytest.raises(ValueError):
        WeightedRing((), ())


def test_arith_examples():
    x = WeightedRing(("x",), (2,)).gen(0)
    assert (x + 1) + (-x) == Polynomial.constant(x.ring, 1)
    assert arith(P("x1 - x2"), P("x1 + x2"), "mul") == P("x1^2 - x2^2")
    assert P("x1^3 + 2") * R.zero() == R.zero()
    with pytest.raises(RingMismatchError):
        _ = P("x1") + parse("x", WeightedRing(("x",), (2,)))


def test_weighted_degree_examples():
    assert weighted_degree((1, 1, 1), R) == 6
    assert weighted_degree((0, 0, 0), R) == 0
    assert weighted_degree((2,), WeightedRing(("x",), (6,))) == 12


def test_homogeneity_examples():
    assert is_weighted_homogeneous(P("x1^2 - x2^2")) == (True, 4)
    assert is_weighted_homogeneous(parse("x1^2 - x2^2", WeightedRing(("x1", "x2"), (2, 4))))[0] is False
    assert is_weighted_homogeneous(P("x1*x2*x3")) == (True, 6)
    assert is_weighted_homogeneous(R.zero()) == (True, "any")


def test_linear_part_examples():
    assert linear_part(P("x1 + x2 + x3 + x1*x2")) == P("x1 + x2 + x3")
    assert linear_part(P("x1^2 - x2^2")) == R.zero()
    assert linear_part(R.zero()) == R.zero()


def test_parse_examples():
    assert P("x1^2 - x3^2").terms == {(2, 0, 0): 1, (0, 0, 2): -1}
    assert P("x1*x2*x3").terms == {(1, 1, 1): 1}
    assert P("1/2*x1 + 1/2*x1") == P("x1")
    assert P("-(x1 + x2)^2") == P("-x1^2 - 2*x1*x2 - x2^2")
    assert P("2^3*x1") == P("8*x1")
    assert P(" x1 ^ 2 ") == P("x1^2")


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as e:
        P("x1 + y")
    assert e.value.position == 5
    with pytest.raises(ParseError):
        P("x1^^2")
    with pytest.raises(ParseError):
        P("x1 / x2")
    with pytest.raises(ParseError):
        P("")
    with pytest.raises(ParseError):
        P("(x1")


def test_presentation_rejects_inhomogeneous():
    with pytest.raises(PresentationError):
        Presentation(R, (P("x1^2 + x2"),))
    with pytest.raises(PresentationError):
        Presentation(R, (P("3"),))


def test_printer():
    assert str(P("x1^2 - x2^2")) == "x1^2 - x2^2"
    assert str(P("3/2*x1^2*x2")) == "3/2*x1^2*x2"
    assert str(R.zero()) == "0"


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RING3.zero()


@given(polynomials())
def test_parse_print_roundtrip(a):
    assert parse(str(a), RING3) == a


@given(polynomials(), polynomials())
def test_linear_part_is_linear(a, b):
    assert linear_part(a + b) == linear_part(a) + linear_part(b)


@given(polynomials(max_terms=1), polynomials(max_terms=1))
def test_degree_is_additive(a, b):
    for m in a.terms:
        for n in b.terms:
            assert weighted_degree(mono_mul(m, n), RING3) == weighted_degree(m, RING3) + weighted_degree(n, RING3)


@settings(max_examples=50)
@given(polynomials(), polynomials())
def test_derivative_leibniz(a, b):
    for i in range(3):
        assert (a * b).diff(i) == a.diff(i) * b + a * b.diff(i)


def test_coefficients_are_exact():
    p = P("1/3*x1")
    assert p.coefficient((1, 0, 0)) == Fraction(1, 3)
    with pytest.raises(TypeError):
        p.scale(0.5)

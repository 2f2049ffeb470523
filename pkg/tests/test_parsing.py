from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import polys
from magmahopf.algebra import Poly, mul
from magmahopf.hausdorff import hausdorff_component
from magmahopf.magma import graft, leaf, power
from magmahopf.parsing import ParseError, format_poly, parse

X, Y = Poly.var(1), Poly.var(2)
x = leaf(1)


def test_examples():
    assert parse("x^2*x - x*x^2") == Poly({graft(graft(x, x), x): 1, graft(x, graft(x, x)): -1})
    assert parse("1/2*(x*y) - 1/2*(y*x)") == hausdorff_component(2)
    assert parse("x^3") == Poly.monomial(power(3))
    assert parse("x7*x2") == mul(Poly.var(7), Poly.var(2))
    assert parse("-3 + x") == X - 3
    assert parse("(x (x y))") == mul(X, mul(X, Y))
    assert parse("2*((x y) x)") == mul(mul(X, Y), X).scale(2)
    assert parse("0") == Poly.zero()


def test_triple_product_rejected():
    with pytest.raises(ParseError, match="non-associative product requires explicit parentheses"):
        parse("x*y*z")
    with pytest.raises(ParseError, match="non-associative product requires explicit parentheses"):
        parse("x*y*x")
    with pytest.raises(ParseError, match="non-associative"):
        parse("(x y x)")


@pytest.mark.parametrize("text", ["1/0*x", "1/*x", "1/x"])
def test_malformed_rational(text):
    with pytest.raises(ParseError, match="malformed rational"):
        parse(text)


def test_error_positions():
    with pytest.raises(ParseError) as e:
        parse("x +\n  q")
    assert (e.value.line, e.value.column) == (2, 3)
    with pytest.raises(ParseError) as e:
        parse("(x*y")
    assert "expected ')'" in str(e.value)
    with pytest.raises(ParseError):
        parse("x $ y")
    with pytest.raises(ParseError):
        parse("")
    with pytest.raises(ParseError):
        parse("(x - y z)")


def test_format():
    assert format_poly(Poly.zero()) == "0"
    assert format_poly(hausdorff_component(2)) == "1/2*(x y) - 1/2*(y x)"
    assert format_poly(X - 1) == "-1 + x"
    assert format_poly(parse("-x*x3")) == "-(x x3)"
    assert parse("x2") == Y
    assert str(Poly({x: Fraction(-3, 4)})) == "-3/4*x"


@settings(max_examples=500)
@given(polys(variables=(1, 2, 3), max_degree=5, max_terms=6))
def test_round_trip(f):
    assert parse(format_poly(f)) == f

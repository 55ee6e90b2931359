from fractions import Fraction

import pytest
from conftest import PLANE

from regulous.algebra.parser import BinOp, Neg, Pow, Var, parse_expr, parse_poly, parse_ratfun, parse_vars
from regulous.errors import ExponentOverflowError, ParseError, UnknownVariableError, ZeroDenominatorError


def test_unary_minus_binds_looser_than_power():
    expr = parse_expr("-x^2", PLANE)
    assert isinstance(expr, Neg)
    assert isinstance(expr.operand, Pow)
    assert parse_poly("-x^2", PLANE).evaluate((2, 0)) == -4


def test_left_associativity():
    assert parse_poly("1 - x - y", PLANE).evaluate((1, 1)) == -1
    assert parse_ratfun("x/y/2", PLANE) == parse_ratfun("x/(2*y)", PLANE)


def test_precedence_shapes():
    expr = parse_expr("x + y*x^2", PLANE)
    assert isinstance(expr, BinOp) and expr.op == "+"
    assert isinstance(expr.left, Var)
    assert isinstance(expr.right, BinOp) and expr.right.op == "*"


def test_rational_coefficients():
    assert parse_poly("x/2 + 3/4", PLANE).evaluate((1, 0)) == Fraction(5, 4)


def test_chained_exponent_needs_parentheses():
    with pytest.raises(ParseError) as info:
        parse_expr("x^2^3", PLANE)
    assert info.value.position == 3
    assert parse_poly("(x^2)^3", PLANE) == parse_poly("x^6", PLANE)


def test_unknown_variable_reports_position():
    with pytest.raises(UnknownVariableError) as info:
        parse_expr("2*x + z", PLANE)
    assert info.value.name == "z"
    assert info.value.position == 6


@pytest.mark.parametrize("text", ["(x + y", "x +", "", "x y", "x^y", "x^-1", "*x"])
def test_malformed_input(text):
    with pytest.raises(ParseError):
        parse_expr(text, PLANE)


def test_division_rules():
    with pytest.raises(ParseError):
        parse_poly("x/y", PLANE)
    with pytest.raises(ZeroDenominatorError):
        parse_poly("x/0", PLANE)
    with pytest.raises(ZeroDenominatorError):
        parse_ratfun("x/(y - y)", PLANE)
    assert parse_ratfun("(x^2 - y^2)/(x - y)", PLANE) == parse_ratfun("x + y", PLANE)


def test_exponent_cap():
    with pytest.raises(ExponentOverflowError):
        parse_expr("x^70000", PLANE)


def test_variable_lists():
    assert parse_vars("x, y ,z") == ("x", "y", "z")
    assert parse_vars("x1,x2") == ("x1", "x2")
    for bad in ("", " , ", "x,x", "1x,y", "x-y"):
        with pytest.raises(ParseError):
            parse_vars(bad)

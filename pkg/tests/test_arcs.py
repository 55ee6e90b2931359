from fractions import Fraction

import pytest

from regulous.algebra.arcs import (
    INDETERMINATE,
    MINUS_INFINITY,
    PLUS_INFINITY,
    Arc,
    ExtValue,
    arc_limit,
    default_battery,
    one_sided_limits,
    parse_arc,
    rationals_of_height,
)
from regulous.errors import ArityError, ParseError, PoleError
from regulous.monitor import SearchMonitor


def test_parse_and_print():
    arc = parse_arc("t, t^2")
    assert arc.dim == 2
    assert arc.to_text() == "t, t^2"
    assert str(arc) == "(t, t^2)"
    assert arc.base_point == (0, 0)


def test_base_point_of_translated_and_unbounded_arcs():
    assert parse_arc("1 + t, -2 + t^3").base_point == (1, -2)
    assert parse_arc("1/t, t").base_point is None
    assert Arc.line((1, 2), (0, 1)).translated((1, 1)).base_point == (2, 3)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_arc("t, ")
    with pytest.raises(ParseError):
        parse_arc("t, s")


def test_finite_limits_along_lines(plane):
    f = plane("x^2/(x^2+y^2)")
    assert arc_limit(f, Arc.line((0, 0), (1, 0))) == ExtValue.finite(1)
    assert arc_limit(f, Arc.line((0, 0), (0, 1))) == ExtValue.finite(0)
    assert arc_limit(f, Arc.line((0, 0), (1, 1))) == ExtValue.finite(Fraction(1, 2))


def test_parabola_limit(plane):
    f = plane("x^2*y/(x^4+y^2)")
    assert arc_limit(f, parse_arc("t, t^2")) == ExtValue.finite(Fraction(1, 2))
    assert arc_limit(f, parse_arc("t, 0")) == ExtValue.finite(0)


def test_infinite_and_two_sided_limits(plane):
    f = plane("1/x")
    arc = Arc.line((0, 0), (1, 0))
    assert arc_limit(f, arc, "+") == PLUS_INFINITY
    assert arc_limit(f, arc, "-") == MINUS_INFINITY
    assert arc_limit(f, arc, "both") == INDETERMINATE
    assert one_sided_limits(f, arc) == (PLUS_INFINITY, MINUS_INFINITY)
    assert arc_limit(plane("1/x^2"), arc, "both") == PLUS_INFINITY


def test_limit_errors(plane):
    with pytest.raises(PoleError):
        arc_limit(plane("1/x"), Arc.line((0, 0), (0, 1)))
    with pytest.raises(ArityError):
        arc_limit(plane("x"), parse_arc("t"))
    with pytest.raises(ValueError):
        arc_limit(plane("x"), parse_arc("t, t"), "left")


def test_limit_text():
    assert ExtValue.finite(Fraction(-3, 2)).to_text() == "-3/2"
    assert PLUS_INFINITY.to_text() == "+oo"
    assert MINUS_INFINITY.to_text() == "-oo"
    assert INDETERMINATE.to_text() == "indeterminate"
    assert ExtValue.finite(2).to_json() == {"tag": "finite", "value": "2"}


def test_monitor_counts_arcs(plane):
    monitor = SearchMonitor()
    arc_limit(plane("x"), parse_arc("t, t"), monitor=monitor)
    assert monitor.arcs == 1


def test_rationals_of_height_order():
    values = rationals_of_height(2)
    assert values[:5] == [0, 1, -1, 2, -2]
    assert values[5:] == [Fraction(1, 2), Fraction(-1, 2)]
    assert len(rationals_of_height(3)) == 15


def test_default_battery_passes_through_base():
    base = (Fraction(1), Fraction(-1))
    arcs = list(default_battery(base, 1))
    assert len(arcs) == 2 * 3 * 3
    assert all(arc.base_point == base for arc in arcs)
    space = list(default_battery((0, 0, 0), 1))
    assert all(arc.base_point == (0, 0, 0) for arc in space)
    assert len(space) >= 26

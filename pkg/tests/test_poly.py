from fractions import Fraction

import pytest
from conftest import PLANE, random_point, random_poly

from regulous.algebra.parser import parse_poly
from regulous.algebra.poly import (
    Poly,
    divides,
    exact_div,
    gcd_poly,
    partial_derivative,
    poly_arith,
    resultant,
    squarefree_part,
)
from regulous.config import EXPONENT_CAP
from regulous.errors import (
    AmbientMismatchError,
    ArityError,
    DegenerateInputError,
    ExponentOverflowError,
)


def test_ring_axioms_on_random_polynomials(rng):
    for _ in range(200):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a - b) + b == a
        point = random_point(rng)
        assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
        assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)


def test_text_form_parses_back(rng):
    for _ in range(200):
        p = random_poly(rng, terms=4, degree=3).scale(Fraction(rng.randint(1, 5), rng.randint(1, 5)))
        assert parse_poly(p.to_text(), PLANE) == p


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x^2 - 2*x*y + 1/2", "x^2 - 2*x*y + 1/2"),
        ("1 + y + x", "x + y + 1"),
        ("-y^2 + x^3", "x^3 - y^2"),
        ("0*x", "0"),
        ("(x - y)^2", "x^2 - 2*x*y + y^2"),
    ],
)
def test_canonical_text(text, expected):
    assert parse_poly(text, PLANE).to_text() == expected


def test_inspection():
    p = parse_poly("3*x^2*y - y + 7", PLANE)
    assert p.total_degree == 3
    assert p.degree_in(0) == 2
    assert p.degree_in(1) == 1
    assert p.depends_on() == frozenset({0, 1})
    assert p.lc == 3
    assert Poly.zero(PLANE).degree_in(0) == -1
    assert Poly.const(PLANE, 5).constant_value() == 5
    assert parse_poly("y^2", PLANE).depends_on() == frozenset({1})


def test_normalized_is_primitive_with_positive_leading_coefficient():
    p = parse_poly("-2*x + 4/3*y", PLANE)
    assert p.normalized() == parse_poly("3*x - 2*y", PLANE)
    assert Poly.zero(PLANE).normalized().is_zero


def test_gcd_contains_common_factor(rng):
    for _ in range(200):
        a, b, c = (random_poly(rng) for _ in range(3))
        if c.is_zero or (a.is_zero and b.is_zero):
            continue
        g = gcd_poly(a * c, b * c)
        assert divides(c, g)
        assert divides(g, a * c)
        assert divides(g, b * c)


def test_gcd_of_explicit_pair(plane_poly):
    g = gcd_poly(plane_poly("x^2 - y^2"), plane_poly("2*x^2 + 2*x*y"))
    assert g == plane_poly("x + y")


def test_squarefree_part(plane_poly):
    p = plane_poly("(x - y)^2 * (x + 1)")
    assert squarefree_part(p) == plane_poly("(x - y) * (x + 1)").normalized()
    assert squarefree_part(plane_poly("4*x^3")) == plane_poly("x")
    with pytest.raises(DegenerateInputError):
        squarefree_part(Poly.zero(PLANE))


def test_exact_division(plane_poly):
    assert exact_div(plane_poly("x^2 - y^2"), plane_poly("x - y")) == plane_poly("x + y")
    with pytest.raises(DegenerateInputError):
        exact_div(plane_poly("x^2 + 1"), plane_poly("x"))
    with pytest.raises(DegenerateInputError):
        exact_div(plane_poly("x"), Poly.zero(PLANE))


def test_resultant_eliminates_variable(plane_poly):
    r = resultant(plane_poly("y - x^2"), plane_poly("y - 1"), 1)
    assert r.depends_on() == frozenset({0})
    assert r.normalized() == plane_poly("x^2 - 1")
    circle = resultant(plane_poly("x^2 + y^2 - 1"), plane_poly("x - y"), 1)
    assert circle.normalized() == plane_poly("2*x^2 - 1")
    with pytest.raises(DegenerateInputError):
        resultant(plane_poly("x"), plane_poly("x + 1"), 1)


def test_derivative_and_restriction(plane_poly):
    p = plane_poly("x^3*y + y^2")
    assert partial_derivative(p, 0) == plane_poly("3*x^2*y")
    assert p.diff(1) == plane_poly("x^3 + 2*y")
    assert p.restrict(1, 2) == plane_poly("2*x^3 + 4")
    assert p.restrict(1, 2).names == PLANE
    with pytest.raises(ArityError):
        partial_derivative(p, 2)


def test_restriction_in_single_variable_ring():
    t = Poly.var(("t",), 0)
    assert (t * t + 1).restrict(0, 2) == 5


def test_poly_arith_by_name(plane_poly):
    a, b = plane_poly("x + 1"), plane_poly("y")
    assert poly_arith("add", a, b) == plane_poly("x + y + 1")
    assert poly_arith("sub", a, b) == plane_poly("x - y + 1")
    assert poly_arith("mul", a, b) == plane_poly("x*y + y")
    assert poly_arith("pow", a, 2) == plane_poly("x^2 + 2*x + 1")
    assert poly_arith("neg", b) == plane_poly("-y")
    with pytest.raises(ValueError):
        poly_arith("mod", a, b)


def test_ring_mismatch_is_rejected(plane_poly):
    other = parse_poly("x + z", ("x", "z"))
    with pytest.raises(AmbientMismatchError):
        plane_poly("x") + other
    with pytest.raises(AmbientMismatchError):
        gcd_poly(plane_poly("x"), other)


def test_ring_extension_and_renaming(plane_poly):
    p = plane_poly("x*y + 1")
    assert p.extend_ring(("x", "y", "z")) == parse_poly("x*y + 1", ("x", "y", "z"))
    assert p.rename(("u", "v")) == parse_poly("u*v + 1", ("u", "v"))
    with pytest.raises(AmbientMismatchError):
        p.extend_ring(("x", "z"))


def test_exponent_and_arity_limits(plane_poly):
    x = plane_poly("x")
    with pytest.raises(ExponentOverflowError):
        x ** (EXPONENT_CAP + 1)
    with pytest.raises(DegenerateInputError):
        x ** (-1)
    with pytest.raises(ArityError):
        x.evaluate((1,))
    with pytest.raises(ArityError):
        Poly.from_terms(PLANE, [((1, 0, 0), 1)])

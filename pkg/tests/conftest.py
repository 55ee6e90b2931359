import random
from fractions import Fraction

import pytest

from regulous.algebra.parser import parse_poly, parse_ratfun
from regulous.algebra.poly import Poly

PLANE = ("x", "y")
SPACE = ("x", "y", "z")


def random_poly(rng: random.Random, names=PLANE, terms: int = 3, degree: int = 2) -> Poly:
    """Small random polynomial with integer coefficients in [-3, 3]."""
    picked = []
    for _ in range(terms):
        monom = tuple(rng.randint(0, degree) for _ in names)
        picked.append((monom, rng.randint(-3, 3)))
    return Poly.from_terms(names, picked)


def random_point(rng: random.Random, n: int = 2) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def plane():
    """Parser for plane rational functions."""
    return lambda text: parse_ratfun(text, PLANE)


@pytest.fixture
def plane_poly():
    return lambda text: parse_poly(text, PLANE)

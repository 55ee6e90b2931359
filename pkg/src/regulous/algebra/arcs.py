"""Rational arcs, exact one-sided limits at t = 0 and the default arc batteries."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from regulous.algebra.parser import parse_ratfun
from regulous.algebra.poly import Poly
from regulous.algebra.ratfun import RatFun, substitute_parts
from regulous.algebra.univariate import UNIVARIATE_NAMES, UniPoly
from regulous.config import ARC_HEIGHT
from regulous.errors import ArityError, ParseError, PoleError

SIDES = ("+", "-", "both")


@dataclass(frozen=True)
class ExtValue:
    """Extended value of a one-sided limit."""

    tag: str  # finite | plus_infinity | minus_infinity | indeterminate_two_sided
    value: Fraction | None = None

    @classmethod
    def finite(cls, value: Fraction | int) -> "ExtValue":
        return cls("finite", Fraction(value))

    @property
    def is_finite(self) -> bool:
        return self.tag == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.tag in ("plus_infinity", "minus_infinity")

    def to_text(self) -> str:
        match self.tag:
            case "finite":
                return str(self.value)
            case "plus_infinity":
                return "+oo"
            case "minus_infinity":
                return "-oo"
        return "indeterminate"

    def to_json(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.value is not None:
            out["value"] = str(self.value)
        return out


PLUS_INFINITY = ExtValue("plus_infinity")
MINUS_INFINITY = ExtValue("minus_infinity")
INDETERMINATE = ExtValue("indeterminate_two_sided")


@dataclass(frozen=True)
class Arc:
    """Tuple of univariate rational functions in t; the curve traced for small t > 0."""

    components: tuple[RatFun, ...]

    def __post_init__(self):
        for component in self.components:
            if component.names != UNIVARIATE_NAMES:
                raise ArityError(f"arc component {component} is not a function of t alone")

    @classmethod
    def from_polys(cls, polys: Sequence[Poly]) -> "Arc":
        return cls(tuple(RatFun(p) for p in polys))

    @classmethod
    def line(cls, base: Sequence[Fraction | int], direction: Sequence[Fraction | int]) -> "Arc":
        """t -> base + t * direction."""
        t = Poly.var(UNIVARIATE_NAMES, 0)
        return cls.from_polys([t.scale(d) + Fraction(b) for b, d in zip(base, direction)])

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def base_point(self) -> tuple[Fraction, ...] | None:
        """Limit of the arc at t -> 0+, or None when a component blows up."""
        point = []
        for component in self.components:
            value = _valuation_limit(UniPoly.from_poly(component.num, 0), UniPoly.from_poly(component.den, 0), "+")
            if not value.is_finite:
                return None
            point.append(value.value)
        return tuple(point)

    def translated(self, offset: Sequence[Fraction | int]) -> "Arc":
        return Arc(tuple(c + Fraction(o) for c, o in zip(self.components, offset)))

    def to_text(self) -> str:
        return ", ".join(c.to_text() for c in self.components)

    def __str__(self) -> str:
        return f"({self.to_text()})"


def parse_arc(text: str) -> Arc:
    """Parses the arc format: comma separated expressions in t, e.g. "t, t^2"."""
    parts = text.split(",")
    components = []
    offset = 0
    for part in parts:
        if not part.strip():
            raise ParseError("empty arc component", offset)
        try:
            components.append(parse_ratfun(part, UNIVARIATE_NAMES))
        except ParseError as err:
            raise ParseError(f"arc component {len(components) + 1}: {err}", offset + err.position) from None
        offset += len(part) + 1
    return Arc(tuple(components))


def _valuation_limit(num: UniPoly, den: UniPoly, side: str) -> ExtValue:
    if num.is_zero:
        return ExtValue.finite(0)
    v_num, v_den = num.order(), den.order()
    ratio = num.coeffs[v_num] / den.coeffs[v_den]
    valuation = v_num - v_den
    if valuation > 0:
        return ExtValue.finite(0)
    if valuation == 0:
        return ExtValue.finite(ratio)
    sign = 1 if ratio > 0 else -1
    if side == "-" and valuation % 2:
        sign = -sign
    return PLUS_INFINITY if sign > 0 else MINUS_INFINITY


def arc_composition(f: RatFun, arc: Arc) -> tuple[UniPoly, UniPoly]:
    """Unreduced numerator and denominator of f along the arc, as polynomials in t."""
    if arc.dim != f.nvars:
        raise ArityError(f"arc in R^{arc.dim} for a function of {f.nvars} variables")
    p_num, p_den = substitute_parts(f.num, arc.components)
    q_num, q_den = substitute_parts(f.den, arc.components)
    if q_num.is_zero:
        raise PoleError(f"arc {arc} lies inside the pole locus of {f}")
    return UniPoly.from_poly(p_num * q_den, 0), UniPoly.from_poly(q_num * p_den, 0)


def arc_limit(f: RatFun, arc: Arc, side: str = "+", monitor=None) -> ExtValue:
    """Exact limit of f along the arc as t -> 0 from one side (or both, compared)."""
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got '{side}'")
    num, den = arc_composition(f, arc)
    if side == "both":
        plus, minus = _valuation_limit(num, den, "+"), _valuation_limit(num, den, "-")
        value = plus if plus == minus else INDETERMINATE
    else:
        value = _valuation_limit(num, den, side)
    if monitor is not None:
        monitor.record_arc(arc.to_text(), value.to_text())
    return value


def one_sided_limits(f: RatFun, arc: Arc, monitor=None) -> tuple[ExtValue, ExtValue]:
    """(limit at 0+, limit at 0-) from a single composition."""
    num, den = arc_composition(f, arc)
    plus, minus = _valuation_limit(num, den, "+"), _valuation_limit(num, den, "-")
    if monitor is not None:
        monitor.record_arc(arc.to_text(), f"{plus.to_text()} / {minus.to_text()}")
    return plus, minus


# --- batteries ------------------------------------------------------------------


def rationals_of_height(height: int) -> list[Fraction]:
    """All p/q with |p|, q <= height, simplest first (0, 1, -1, 2, -2, ..., 1/2, -1/2, ...)."""
    values = {Fraction(p, q) for q in range(1, height + 1) for p in range(-height, height + 1)}
    return sorted(values, key=lambda v: (v.denominator, abs(v.numerator), v < 0))


def default_battery(base: Sequence[Fraction | int], height: int = ARC_HEIGHT) -> Iterator[Arc]:
    """
    Arcs through base: in the plane the parabolas (t, a t + b t^2) and their swaps; in R^n lines
    in the directions {-1, 0, 1}^n and their parabolic bends along the first moving coordinate.
    """
    base = tuple(Fraction(c) for c in base)
    t = Poly.var(UNIVARIATE_NAMES, 0)
    coefficients = rationals_of_height(height)
    if len(base) == 2:
        for a, b in product(coefficients, repeat=2):
            bent = t.scale(a) + (t * t).scale(b)
            yield Arc.from_polys([t + base[0], bent + base[1]])
        for a, b in product(coefficients, repeat=2):
            bent = t.scale(a) + (t * t).scale(b)
            yield Arc.from_polys([bent + base[0], t + base[1]])
        return
    directions = [d for d in product((0, 1, -1), repeat=len(base)) if any(d)]
    for direction in directions:
        yield Arc.line(base, direction)
    for direction in directions:
        lead = next(i for i, d in enumerate(direction) if d)
        for i in range(len(base)):
            if i == lead:
                continue
            components = [t.scale(d) + c for d, c in zip(direction, base)]
            components[i] = components[i] + (t * t)
            yield Arc.from_polys(components)

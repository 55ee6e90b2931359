"""
Indeterminacy candidates of a plane rational function.

The squarefree part s of the denominator is analysed by a one-level cylindrical decomposition:
the real roots of c(x) * lc_y(s') * Res_y(s', ds'/dy) (c the y-content of s, s' = s / c) cut the
x-line into cells; one rational sample per open cell decides whether Z(s) contains a curve, and
the finitely many root abscissas carry every singular point of s.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product

from regulous.algebra.arcs import rationals_of_height
from regulous.algebra.poly import Poly, exact_div, gcd_poly, resultant, squarefree_part
from regulous.algebra.ratfun import RatFun
from regulous.algebra.univariate import UniPoly, isolate_real_roots, rational_roots, sample_between
from regulous.config import SAMPLE_HEIGHT
from regulous.errors import DimensionError

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class CandidateReport:
    rational_points: tuple[Point, ...] = ()
    nonrational_roots: bool = False
    curve_of_poles: bool = False
    sign_witness: tuple[Point, Point] | None = None
    curve_points: tuple[Point, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {
            "rational_points": [[str(c) for c in p] for p in self.rational_points],
            "nonrational_roots_flag": self.nonrational_roots,
            "curve_of_poles_flag": self.curve_of_poles,
            "sign_witness": None if self.sign_witness is None else [[str(c) for c in p] for p in self.sign_witness],
        }


def _y_content(s: Poly) -> Poly:
    """gcd of the coefficients of s viewed as a polynomial in y, as a polynomial in x."""
    by_degree: dict[int, list] = {}
    for monom, coeff in s.terms():
        by_degree.setdefault(monom[1], []).append(((monom[0], 0), coeff))
    coefficients = [Poly.from_terms(s.names, terms) for terms in by_degree.values()]
    return reduce(gcd_poly, coefficients)


def _column(p: Poly, x0: Fraction) -> UniPoly:
    return UniPoly.from_poly(p.restrict(0, x0), 1)


def _sign(p: Poly, point: Point) -> int:
    value = p.evaluate(point)
    return (value > 0) - (value < 0)


def _column_witness(s: Poly, x0: Fraction, roots) -> tuple[Point, Point] | None:
    samples = sample_between(roots)
    for lo, hi in zip(samples, samples[1:]):
        a, b = (x0, lo), (x0, hi)
        if _sign(s, a) * _sign(s, b) < 0:
            return a, b
    return None


def _vertical_witness(s: Poly, roots) -> tuple[Point, Point] | None:
    samples = sample_between(roots)
    for y0 in rationals_of_height(2):
        for lo, hi in zip(samples, samples[1:]):
            a, b = (lo, y0), (hi, y0)
            if _sign(s, a) * _sign(s, b) < 0:
                return a, b
    return None


def _curve_analysis(s: Poly) -> tuple[bool, tuple[Point, Point] | None, UniPoly]:
    """(curve?, sign-change witness, critical polynomial in x)."""
    content = _y_content(s)
    primitive = exact_div(s, content)
    critical = UniPoly.from_poly(content, 0) if not content.is_constant else UniPoly((Fraction(1),))
    if not content.is_constant:
        roots = isolate_real_roots(critical)
        if roots:
            return True, _vertical_witness(s, roots), critical
    if primitive.degree_in(1) < 1:
        return False, None, critical
    leading = Poly.from_terms(
        s.names, [((m[0], 0), c) for m, c in primitive.terms() if m[1] == primitive.degree_in(1)]
    )
    discriminant = resultant(primitive, primitive.diff(1), 1)
    critical_poly = UniPoly.from_poly(
        leading * discriminant * (content if not content.is_constant else Poly.const(s.names, 1)), 0
    )
    for x0 in sample_between(isolate_real_roots(critical_poly)):
        roots = isolate_real_roots(_column(primitive, x0))
        if roots:
            return True, _column_witness(s, x0, roots), critical_poly
    return False, None, critical_poly


def _singular_points(s: Poly, critical: UniPoly) -> tuple[list[Point], bool]:
    """Rational solutions of s = ds/dx = ds/dy = 0, and whether non-rational ones may exist."""
    points: list[Point] = []
    nonrational = False
    if critical.degree < 1:
        return points, nonrational
    gradient = (s.diff(0), s.diff(1))
    for root in isolate_real_roots(critical):
        if not root.is_exact:
            nonrational = True
            continue
        x0 = root.exact
        columns = [c for c in (_column(p, x0) for p in (s, *gradient)) if not c.is_zero]
        if not columns:
            continue
        common = reduce(_gcd_uni, columns)
        if common.degree < 1:
            continue
        for y_root in isolate_real_roots(common):
            if y_root.is_exact:
                points.append((x0, y_root.exact))
            else:
                nonrational = True
    return points, nonrational


def _gcd_uni(a: UniPoly, b: UniPoly) -> UniPoly:
    return UniPoly.from_poly(gcd_poly(a.to_poly(), b.to_poly()))


def _common_zeros(p: Poly, s: Poly) -> list[Point]:
    """Rational common zeros of p and s (both nonzero), via elimination of y."""
    if p.is_constant:
        return []
    if p.degree_in(1) >= 1 and s.degree_in(1) >= 1:
        eliminated = resultant(p, s, 1)
        xs = rational_roots(UniPoly.from_poly(eliminated, 0)) if not eliminated.is_zero else []
    else:
        only_x = p if p.degree_in(1) < 1 else s
        xs = rational_roots(UniPoly.from_poly(only_x, 0))
    points = []
    for x0 in xs:
        columns = [c for c in (_column(p, x0), _column(s, x0)) if not c.is_zero]
        if not columns:
            continue
        common = reduce(_gcd_uni, columns)
        if common.degree >= 1:
            points.extend((x0, y0) for y0 in rational_roots(common))
    return points


def indeterminacy_candidates(f: RatFun, height: int = SAMPLE_HEIGHT) -> CandidateReport:
    """Rational indeterminacy candidates of a plane rational function, with pole-curve detection."""
    if f.nvars != 2:
        raise DimensionError(f"indeterminacy candidates need a plane function, got {f.nvars} variables")
    if f.is_polynomial:
        return CandidateReport()
    s = squarefree_part(f.den)
    curve, witness, critical = _curve_analysis(s)
    points, nonrational = _singular_points(s, critical)
    curve_points: tuple[Point, ...] = ()
    if curve:
        points.extend(_common_zeros(f.num, s))
        curve_points = tuple(rational_points_on_curve(s, height))
    return CandidateReport(
        rational_points=tuple(sorted(set(points))),
        nonrational_roots=nonrational,
        curve_of_poles=curve,
        sign_witness=witness,
        curve_points=curve_points,
    )


def rational_points_on_curve(q: Poly, height: int = SAMPLE_HEIGHT, limit: int = 64) -> list[Point]:
    """
    Rational points of Z(q) found by fixing all but the last coordinate to small rationals and
    extracting rational roots in the last one. Vertical lines inside Z(q) contribute one point.
    """
    if q.is_zero:
        return [tuple(Fraction(0) for _ in range(q.nvars))]
    last = q.nvars - 1
    values = rationals_of_height(height if q.nvars <= 2 else min(height, 2))
    found: list[Point] = []
    for head in product(values, repeat=last):
        column = q
        for i, value in enumerate(head):
            column = column.restrict(i, value)
        u = UniPoly.from_poly(column, last) if not column.is_zero else UniPoly(())
        if u.is_zero:
            found.append((*head, Fraction(0)))
        elif u.degree >= 1:
            found.extend((*head, y0) for y0 in rational_roots(u))
        if len(found) >= limit:
            break
    return found[:limit]


def real_zero_free(q: Poly) -> bool:
    """Certified absence of real zeros for a plane or univariate polynomial (False = not certified)."""
    if q.is_zero:
        return False
    if q.is_constant:
        return True
    used = q.depends_on()
    if len(used) == 1:
        return not isolate_real_roots(UniPoly.from_poly(q))
    if q.nvars == 2:
        report = indeterminacy_candidates(RatFun(Poly.const(q.names, 1), q))
        return not (report.curve_of_poles or report.rational_points or report.nonrational_roots)
    return False


def sign_battery(nvars: int, height: int = 2) -> list[Point]:
    """Grid of rational probe points with coordinates of height <= height, simplest first."""
    values = rationals_of_height(height)
    points = list(product(values, repeat=nvars))
    points.sort(key=lambda p: sum(abs(c.numerator) + c.denominator for c in p))
    return points

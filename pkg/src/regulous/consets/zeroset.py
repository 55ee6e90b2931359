"""Zero sets of plane regulous functions and the euclidean-closedness probe."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from regulous.algebra.arcs import Arc, arc_composition, default_battery
from regulous.algebra.candidates import rational_points_on_curve
from regulous.algebra.poly import Poly, squarefree_part
from regulous.algebra.ratfun import RatFun
from regulous.blowup.decide import decide_regulous2
from regulous.config import ARC_HEIGHT, DEFAULT_BUDGET, Budget
from regulous.consets.sets import ConstructibleSet, Piece, member
from regulous.errors import DimensionError, NotRegulousError

Point = tuple[Fraction, ...]


def _away_from(point: Point, names: Sequence[str]) -> Poly:
    """Sum of (x_i - a_i)^2: vanishes at the point only."""
    total = Poly.zero(names)
    for i, c in enumerate(point):
        shifted = Poly.var(names, i) - c
        total = total + shifted * shifted
    return total


def zero_set2(f: RatFun, budget: Budget = DEFAULT_BUDGET, monitor=None) -> ConstructibleSet:
    """
    Z(f) for the continuous extension of a plane 0-regulous f: the zeros of its numerator, minus
    the indeterminacy points with a nonzero value, plus those with value zero.

    Raises:
        NotRegulousError: f is not certified 0-regulous.

    Example:
        (y^2+x^2-x^3)/(x^2+y^2) -> [Z(x^3-x^2-y^2) \\ Z(x^2+y^2)] since f(0,0) = 1
    """
    if f.nvars != 2:
        raise DimensionError(f"plane zero sets need 2 variables, got {f.nvars}")
    if f.is_zero:
        return ConstructibleSet.whole(f.names)
    if f.is_polynomial:
        return ConstructibleSet.zero_set(f.num)
    verdict = decide_regulous2(f, 0, budget, monitor)
    if not verdict.is_regulous:
        raise NotRegulousError(f"zero set needs a regulous function: {verdict.to_text(f.names)}")
    if f.num.is_constant:
        numerator: list[Piece] = []
        s = None
    else:
        s = squarefree_part(f.num)
        nonzero = [p for p, v in sorted(verdict.values.items()) if v != 0 and s.evaluate(p) == 0]
        excluded = tuple(_away_from(p, f.names) for p in nonzero)
        numerator = [Piece((s,), excluded)]
    extra = [
        Piece(tuple(Poly.var(f.names, i) - c for i, c in enumerate(p)), (), 0)
        for p, v in sorted(verdict.values.items())
        if v == 0 and (s is None or s.evaluate(p) != 0)
    ]
    return ConstructibleSet.of(f.names, numerator + extra)


# --- closedness probe -----------------------------------------------------------


@dataclass(frozen=True)
class ClosednessWitness:
    """An arc inside S for small t > 0 whose limit point is outside S."""

    arc: Arc
    limit: Point

    def to_text(self) -> str:
        return f"arc {self.arc} stays in S, limit (" + ",".join(str(c) for c in self.limit) + ") is not in S"


def arc_in_piece(arc: Arc, piece: Piece) -> bool:
    """The arc stays in the piece for all small t > 0: equations vanish identically, inequations do not."""
    for e in piece.equations:
        num, _ = arc_composition(RatFun(e), arc)
        if not num.is_zero:
            return False
    for i in piece.inequations:
        num, _ = arc_composition(RatFun(i), arc)
        if num.is_zero:
            return False
    return True


def boundary_candidates(s: ConstructibleSet, limit: int = 8) -> list[Point]:
    """Rational points where a piece's equations hold but one of its inequations vanishes."""
    found: list[Point] = []
    for piece in s.pieces:
        for i in piece.inequations:
            for point in rational_points_on_curve(i):
                if all(e.evaluate(point) == 0 for e in piece.equations) and point not in found:
                    found.append(point)
                if len(found) >= limit:
                    return found
    return found


def euclid_closed_probe(
    s: ConstructibleSet, battery: Iterable[Arc] | None = None, height: int = ARC_HEIGHT
) -> ClosednessWitness | None:
    """
    Searches for an arc lying in S for small t > 0 whose limit point is not in S.

    Args:
        s: Constructible set.
        battery: Explicit arcs; by default the default battery through every boundary candidate.
        height: Coefficient height of the default battery.

    Returns:
        A ClosednessWitness, or None.
    """
    if battery is None:
        battery = (arc for point in boundary_candidates(s) for arc in default_battery(point, height))
    for arc in battery:
        limit = arc.base_point
        if limit is None or member(s, limit):
            continue
        if any(arc_in_piece(arc, piece) for piece in s.pieces):
            return ClosednessWitness(arc, limit)
    return None

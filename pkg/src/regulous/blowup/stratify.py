"""Stratification of a plane regulous function into strata where it is regular."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from regulous.algebra.poly import Poly
from regulous.algebra.ratfun import RatFun
from regulous.blowup.decide import decide_regulous2
from regulous.config import DEFAULT_BUDGET, Budget
from regulous.errors import DimensionError, NotRegulousError

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class Stratification2:
    """
    D(q) for the reduced denominator q of f, plus one singleton stratum per real zero of q
    carrying the value of the continuous extension there.
    """

    function: RatFun
    open_stratum: Poly  # q: the stratum is D(q)
    points: tuple[tuple[Point, Fraction], ...]

    def locate(self, point: Sequence[Fraction | int]) -> int:
        """-1 for the open stratum, otherwise the index of the point stratum."""
        point = tuple(Fraction(c) for c in point)
        if self.open_stratum.evaluate(point) != 0:
            return -1
        for i, (p, _) in enumerate(self.points):
            if p == point:
                return i
        raise NotRegulousError(f"{point} lies in no stratum")

    def value_at(self, point: Sequence[Fraction | int]) -> Fraction:
        index = self.locate(point)
        if index < 0:
            return self.function.evaluate(point)
        return self.points[index][1]

    def to_json(self) -> dict:
        return {
            "function": self.function.to_text(),
            "vars": list(self.function.names),
            "open": {"nonvanishing": self.open_stratum.to_text()},
            "points": [{"point": [str(c) for c in p], "value": str(v)} for p, v in self.points],
        }

    def to_text(self) -> str:
        parts = ["R^2" if self.open_stratum.is_constant else f"D({self.open_stratum.to_text()})"]
        for p, v in self.points:
            parts.append("({" + "(" + ",".join(str(c) for c in p) + ")}, " + str(v) + ")")
        return "{" + ", ".join(parts) + "}"


def stratify2(f: RatFun, budget: Budget = DEFAULT_BUDGET, monitor=None) -> Stratification2:
    """
    Strata of R^2 on which the continuous extension of f is regular.

    Raises:
        NotRegulousError: f is not certified 0-regulous (refuted or undecided).
    """
    if f.nvars != 2:
        raise DimensionError(f"stratification is planar, got {f.nvars} variables")
    if f.is_polynomial:
        return Stratification2(f, Poly.const(f.names, 1), ())
    verdict = decide_regulous2(f, 0, budget, monitor)
    if not verdict.is_regulous:
        raise NotRegulousError(f"cannot stratify: {verdict.to_text(f.names)}")
    return Stratification2(f, f.den, tuple(sorted(verdict.values.items())))

"""Verdicts, arc witnesses and arc-battery refutation (any number of variables)."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from regulous.algebra.arcs import Arc, ExtValue, arc_limit, default_battery, parse_arc, rationals_of_height
from regulous.algebra.candidates import indeterminacy_candidates
from regulous.algebra.ratfun import RatFun, compose, jet
from regulous.blowup.charts import Chart
from regulous.blowup.resolution import FiberReport, ResolutionTree
from regulous.config import ARC_HEIGHT
from regulous.errors import PoleError

Point = tuple[Fraction, ...]
MultiIndex = tuple[int, ...]

REGULOUS = "Regulous"
NOT_REGULOUS = "NotRegulous"
UNKNOWN = "Unknown"

GRID_VALUES = (Fraction(-1), Fraction(0), Fraction(1), Fraction(2))


def _fmt(point: Sequence[Fraction]) -> str:
    return "(" + ",".join(str(c) for c in point) + ")"


@dataclass(frozen=True)
class ArcWitness:
    """Either one arc with an infinite limit or two arcs through one point with distinct limits."""

    base_point: Point
    arcs: tuple[Arc, ...]
    limits: tuple[ExtValue, ...]
    index: MultiIndex = ()  # jet coefficient refuted; () means the function itself

    def describe(self, names: Sequence[str] = ()) -> str:
        arcs = " / ".join(str(a) for a in self.arcs)
        limits = " vs ".join(v.to_text() for v in self.limits)
        target = _coefficient_name(self.index, names)
        noun = "witness arcs" if len(self.arcs) > 1 else "witness arc"
        return f"{noun} {arcs}{target} with limits {limits}"

    def to_json(self) -> dict:
        return {
            "base_point": [str(c) for c in self.base_point],
            "arcs": [a.to_text() for a in self.arcs],
            "limits": [v.to_json() for v in self.limits],
            "index": list(self.index),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ArcWitness":
        return cls(
            base_point=tuple(Fraction(c) for c in data["base_point"]),
            arcs=tuple(parse_arc(text) for text in data["arcs"]),
            limits=tuple(
                ExtValue(v["tag"], Fraction(v["value"]) if "value" in v else None) for v in data["limits"]
            ),
            index=tuple(data.get("index", ())),
        )


def _coefficient_name(index: MultiIndex, names: Sequence[str]) -> str:
    if not any(index):
        return ""
    parts = []
    for name, order in zip(names or [f"x{i + 1}" for i in range(len(index))], index):
        if order:
            parts.append(f"d{name}" if order == 1 else f"d{name}^{order}")
    return " on " + "".join(parts) + " f"


@dataclass(frozen=True)
class Verdict:
    tag: str
    k: int | None = None
    values: dict[Point, Fraction] = field(default_factory=dict)
    witness: ArcWitness | None = None
    fiber: FiberReport | None = None
    reason: str = ""

    @property
    def is_regulous(self) -> bool:
        return self.tag == REGULOUS

    @property
    def is_unknown(self) -> bool:
        return self.tag == UNKNOWN

    def to_text(self, names: Sequence[str] = ()) -> str:
        if self.tag == REGULOUS:
            head = f"Regulous({self.k})"
            if self.values:
                head += ", " + ", ".join(f"value {v} at {_fmt(p)}" for p, v in sorted(self.values.items()))
            return head
        if self.tag == NOT_REGULOUS:
            if self.witness is not None:
                return f"NotRegulous, {self.witness.describe(names)}"
            return f"NotRegulous, {self.reason}"
        return f"Unknown ({self.reason})" if self.reason else "Unknown"

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "k": self.k,
            "values": [{"point": [str(c) for c in p], "value": str(v)} for p, v in sorted(self.values.items())],
            "witness": None if self.witness is None else self.witness.to_json(),
            "fiber": None if self.fiber is None else self.fiber.to_json(),
            "reason": self.reason,
        }


def regulous(k: int, values: dict[Point, Fraction] | None = None, reason: str = "") -> Verdict:
    return Verdict(REGULOUS, k, dict(values or {}), reason=reason)


def not_regulous(witness: ArcWitness | None = None, fiber: FiberReport | None = None, reason: str = "") -> Verdict:
    return Verdict(NOT_REGULOUS, witness=witness, fiber=fiber, reason=reason)


def unknown(reason: str) -> Verdict:
    return Verdict(UNKNOWN, reason=reason)


# --- witnesses ------------------------------------------------------------------


def _safe_limit(f: RatFun, arc: Arc, monitor) -> ExtValue | None:
    try:
        return arc_limit(f, arc, "+", monitor)
    except PoleError:
        return None


def first_witness(f: RatFun, arcs: Iterable[Arc], base: Point, monitor=None) -> ArcWitness | None:
    """Scans arcs through one point; stops at an infinite limit or a second distinct finite limit."""
    first: tuple[Arc, ExtValue] | None = None
    for arc in arcs:
        value = _safe_limit(f, arc, monitor)
        if value is None:
            continue
        if value.is_infinite:
            return ArcWitness(base, (arc,), (value,))
        if first is None:
            first = (arc, value)
        elif value != first[1]:
            return ArcWitness(base, (first[0], arc), (first[1], value))
    return None


def verify_witness(f: RatFun, witness: ArcWitness, monitor=None) -> bool:
    """Re-checks a witness from scratch: arcs pass through the base point and the limits are as claimed."""
    target = f
    if any(witness.index):
        target = jet(f, sum(witness.index)).coeffs[witness.index]
    for arc in witness.arcs:
        if arc.base_point != witness.base_point:
            return False
    try:
        limits = tuple(arc_limit(target, arc, "+", monitor) for arc in witness.arcs)
    except PoleError:
        return False
    if limits != witness.limits:
        return False
    if len(limits) == 1:
        return limits[0].is_infinite
    return len(limits) == 2 and limits[0] != limits[1]


def _chart_arcs(chart: Chart, slopes: Sequence[Fraction]) -> list[Arc]:
    if chart.which == "A":
        local = [Arc.line((0, s), (1, 0)) for s in slopes]
    else:
        local = [Arc.line((0, 0), (0, 1))] + [Arc.line((0, 0), (1, s)) for s in slopes]
    return [Arc(tuple(compose(m, a.components) for m in chart.map_to_root)) for a in local]


def synthesize_witness(tree: ResolutionTree, point: Point, index: MultiIndex = (), monitor=None) -> ArcWitness | None:
    """
    Arcs lifted from the charts above point: chart A arcs (t, v1) run into the exceptional line at
    v1, chart B arcs run into the one direction chart A misses.
    """
    slopes = rationals_of_height(ARC_HEIGHT)
    charts = tree.charts_over(point)
    a_charts = [c for c in charts if c.which == "A"]
    b_charts = [c for c in charts if c.which == "B"]
    ordered: list[Arc] = []
    for chart in a_charts:
        ordered.extend(_chart_arcs(chart, slopes[:1]))
    for chart in b_charts:
        ordered.extend(_chart_arcs(chart, [Fraction(1), Fraction(-1)]))
    for chart in a_charts:
        ordered.extend(_chart_arcs(chart, slopes[1:]))
    witness = first_witness(tree.function, ordered, point, monitor)
    if witness is None:
        return None
    return ArcWitness(witness.base_point, witness.arcs, witness.limits, index)


def grid_base_points(f: RatFun) -> list[Point]:
    """Points of {-1, 0, 1, 2}^n where the denominator vanishes."""
    return [p for p in product(GRID_VALUES, repeat=f.nvars) if f.den.evaluate(p) == 0]


def default_base_points(f: RatFun) -> list[Point]:
    if f.is_polynomial:
        return []
    if f.nvars == 2:
        report = indeterminacy_candidates(f)
        points = list(report.rational_points)
        points.extend(p for p in report.curve_points if p not in points)
        return points
    return grid_base_points(f)


def refute_by_arcs(
    f: RatFun,
    battery: Sequence[Arc] | None = None,
    base_points: Sequence[Point] | None = None,
    height: int = ARC_HEIGHT,
    monitor=None,
) -> ArcWitness | None:
    """
    Searches a battery for a continuity counterexample: an arc with infinite limit, or two arcs
    through one point with different limits.

    Args:
        f: Rational function in any number of variables.
        battery: Explicit arcs; they are grouped by their own base points. Without it the default
            battery is run through every base point.
        base_points: Points for the default battery; by default the indeterminacy candidates
            (plane) or the grid points of {-1, 0, 1, 2}^n on the pole locus.
        height: Coefficient height of the default battery.
        monitor: Optional SearchMonitor receiving ARC events.
    """
    if battery is not None:
        groups: dict[Point, list[Arc]] = {}
        for arc in battery:
            base = arc.base_point
            if base is not None:
                groups.setdefault(base, []).append(arc)
        for base, arcs in groups.items():
            witness = first_witness(f, arcs, base, monitor)
            if witness is not None:
                return witness
        return None
    points = default_base_points(f) if base_points is None else [tuple(Fraction(c) for c in p) for p in base_points]
    for base in points:
        witness = first_witness(f, default_battery(base, height), base, monitor)
        if witness is not None:
            return witness
    return None


def verdict_summary(verdict: Verdict) -> dict:
    """Tag, class and extension values only: the part of a verdict stored inside certificates."""
    return {
        "tag": verdict.tag,
        "k": verdict.k,
        "values": [{"point": [str(c) for c in p], "value": str(v)} for p, v in sorted(verdict.values.items())],
        "reason": verdict.reason,
    }


def verdict_from_summary(data: dict) -> Verdict:
    values = {tuple(Fraction(c) for c in item["point"]): Fraction(item["value"]) for item in data.get("values", ())}
    return Verdict(data["tag"], data.get("k"), values, reason=data.get("reason", ""))

"""
Resolution of indeterminacy in the plane by iterated point blow-ups.

Every rational indeterminacy point x of f roots its own subtree. A chart A child is responsible
for its whole exceptional line u = 0, a chart B child only for its origin (the one direction chart
A misses). A chart needs further blow-ups at the points of its responsibility region where the
reduced pullback still has a zero denominator.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction

from regulous.algebra.candidates import CandidateReport, indeterminacy_candidates
from regulous.algebra.ratfun import RatFun
from regulous.algebra.univariate import UniPoly, isolate_real_roots
from regulous.blowup.charts import Chart, blowup_point, pullback, root_chart
from regulous.config import DEFAULT_BUDGET, Budget
from regulous.errors import DimensionError, UnresolvedTreeError

Point = tuple[Fraction, ...]

RESOLVED = "resolved"
BUDGET_EXCEEDED = "budget_exceeded"
NONRATIONAL_CENTER = "nonrational_center"
POLE_CURVE = "pole_curve"
UNBOUNDED = "unbounded"


@dataclass
class ResolutionTree:
    function: RatFun
    status: str = RESOLVED
    centers: list[Point] = field(default_factory=list)
    charts: dict[int, Chart] = field(default_factory=dict)
    pullbacks: dict[int, RatFun] = field(default_factory=dict)
    leaves: list[int] = field(default_factory=list)
    over: dict[int, Point] = field(default_factory=dict)  # chart id -> indeterminacy point below it
    depth: int = 0
    detail: str = ""
    candidates: CandidateReport | None = None

    @property
    def leaf_pullbacks(self) -> dict[int, RatFun]:
        return {i: self.pullbacks[i] for i in self.leaves}

    def charts_over(self, point: Point) -> list[Chart]:
        return [self.charts[i] for i in sorted(self.charts) if self.over.get(i) == point]

    def to_json(self) -> dict:
        nodes = []
        for chart_id in sorted(self.charts):
            node = self.charts[chart_id].to_json()
            g = self.pullbacks.get(chart_id)
            node["pullback"] = None if g is None else {"num": g.num.to_text(), "den": g.den.to_text()}
            node["leaf"] = chart_id in self.leaves
            over = self.over.get(chart_id)
            node["over"] = None if over is None else [str(c) for c in over]
            nodes.append(node)
        return {
            "function": self.function.to_text(),
            "vars": list(self.function.names),
            "status": self.status,
            "detail": self.detail,
            "depth": self.depth,
            "centers": [[str(c) for c in p] for p in self.centers],
            "nodes": nodes,
        }


def _exceptional_line(g: RatFun) -> UniPoly:
    """Denominator of the chart pullback along u = 0, as a polynomial in v."""
    return UniPoly.from_poly(g.den.restrict(0, 0), 1)


def problem_centers(g: RatFun, chart: Chart) -> tuple[str | None, list[Point]]:
    """
    Points of the chart's responsibility region where the pullback is not yet regular.

    Returns (failure status or None, rational centers to blow up).
    """
    if chart.which == "B":
        return None, [(Fraction(0), Fraction(0))] if g.den.evaluate((0, 0)) == 0 else []
    line = _exceptional_line(g)
    if line.is_zero:
        return UNBOUNDED, []
    centers = []
    for root in isolate_real_roots(line) if line.degree >= 1 else []:
        if not root.is_exact:
            return NONRATIONAL_CENTER, []
        centers.append((Fraction(0), root.exact))
    return None, centers


def resolve_indeterminacy2(f: RatFun, budget: Budget = DEFAULT_BUDGET, monitor=None) -> ResolutionTree:
    """
    Blows up rational indeterminacy points until every chart pullback is regular on its region.

    Args:
        f: Plane rational function.
        budget: `budget.depth` bounds the number of nested blow-ups above a point.
        monitor: Optional SearchMonitor receiving BLOWUP events.

    Returns:
        The tree; its status is `resolved`, or names the first obstruction met.
    """
    if f.nvars != 2:
        raise DimensionError(f"plane resolution needs 2 variables, got {f.nvars}")
    start = time.time()
    tree = ResolutionTree(f)
    if f.is_polynomial:
        return tree
    report = indeterminacy_candidates(f, budget.sample_height)
    tree.candidates = report
    if report.curve_of_poles:
        tree.status, tree.detail = POLE_CURVE, "denominator vanishes along a real curve"
        return tree
    if report.nonrational_roots:
        tree.status, tree.detail = NONRATIONAL_CENTER, "indeterminacy candidate with irrational coordinates"
        return tree

    root = root_chart(f.names)
    tree.charts[root.id] = root
    tree.pullbacks[root.id] = f
    next_id = 1
    for point in report.rational_points:
        tree.centers.append(point)
        pending = [(root, point)]
        while pending:
            chart, center = pending.pop(0)
            if chart.depth + 1 > budget.depth:
                tree.status = BUDGET_EXCEEDED
                tree.detail = f"depth {budget.depth} reached above {_fmt(point)}"
                return tree
            chart_a, chart_b = blowup_point(chart, center, (next_id, next_id + 1))
            next_id += 2
            if monitor is not None:
                monitor.record_blowup(chart.id, center, chart_a.depth)
            for child in (chart_a, chart_b):
                g = pullback(f, child)
                tree.charts[child.id] = child
                tree.pullbacks[child.id] = g
                tree.over[child.id] = point
                tree.depth = max(tree.depth, child.depth)
                failure, centers = problem_centers(g, child)
                if failure is not None:
                    tree.status = failure
                    tree.detail = f"chart {child.id} above {_fmt(point)}: " + (
                        "pole along the exceptional curve" if failure == UNBOUNDED else "irrational center"
                    )
                    return tree
                if not centers:
                    tree.leaves.append(child.id)
                pending.extend((child, c) for c in centers)
    if monitor is not None:
        elapsed_ms = (time.time() - start) * 1000
        monitor.log_event("RESOLVE", f"{f} -> {tree.status}, depth {tree.depth} [{elapsed_ms:.1f}ms]")
    return tree


def _fmt(point: Point) -> str:
    return "(" + ", ".join(str(c) for c in point) + ")"


# --- fibers ---------------------------------------------------------------------


@dataclass(frozen=True)
class FiberComponent:
    component: int  # id of the chart whose blow-up created the exceptional curve
    chart: int  # chart A in which the curve is the line u = 0
    restriction: RatFun  # univariate, in t

    @property
    def constant(self) -> Fraction | None:
        return self.restriction.constant_value() if self.restriction.is_constant else None

    def to_json(self) -> dict:
        return {
            "component": self.component,
            "chart": self.chart,
            "restriction": self.restriction.to_text(),
            "constant": None if self.constant is None else str(self.constant),
        }


@dataclass(frozen=True)
class FiberReport:
    point: Point
    components: tuple[FiberComponent, ...]
    point_values: tuple[tuple[int, Fraction], ...]  # chart B leaves: value at their origin

    @property
    def values(self) -> set[Fraction]:
        out = {c.constant for c in self.components}
        out.update(v for _, v in self.point_values)
        return out

    @property
    def continuous(self) -> bool:
        values = self.values
        return None not in values and len(values) == 1

    @property
    def value(self) -> Fraction | None:
        return next(iter(self.values)) if self.continuous else None

    def to_json(self) -> dict:
        return {
            "point": [str(c) for c in self.point],
            "components": [c.to_json() for c in self.components],
            "point_values": [{"chart": i, "value": str(v)} for i, v in self.point_values],
            "continuous": self.continuous,
            "value": None if self.value is None else str(self.value),
        }


def restrict_to_exceptional(g: RatFun) -> RatFun:
    """Pullback restricted to u = 0, as a function of t = v."""
    line = g.restrict(0, 0)
    num = UniPoly.from_poly(line.num, 1).to_poly()
    den = UniPoly.from_poly(line.den, 1).to_poly()
    return RatFun(num, den)


def fiber_values(tree: ResolutionTree, point) -> FiberReport:
    """Restrictions of the resolved function to every exceptional curve above point."""
    if tree.status != RESOLVED:
        raise UnresolvedTreeError(f"tree status is {tree.status}")
    point = tuple(Fraction(c) for c in point)
    if point not in tree.centers:
        raise UnresolvedTreeError(f"{_fmt(point)} is not a resolved indeterminacy point")
    components = []
    point_values = []
    for chart in tree.charts_over(point):
        g = tree.pullbacks[chart.id]
        if chart.which == "A":
            components.append(FiberComponent(chart.parent, chart.id, restrict_to_exceptional(g)))
        elif chart.id in tree.leaves:
            point_values.append((chart.id, g.evaluate((0, 0))))
    return FiberReport(point, tuple(components), tuple(point_values))


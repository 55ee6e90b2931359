"""Complete k-regulous decision in the plane: jets, resolution and fiber constancy."""

import time
from dataclasses import dataclass
from fractions import Fraction

from regulous.algebra.arcs import default_battery
from regulous.algebra.ratfun import RatFun, jet
from regulous.blowup.resolution import (
    NONRATIONAL_CENTER,
    POLE_CURVE,
    RESOLVED,
    UNBOUNDED,
    ResolutionTree,
    fiber_values,
    resolve_indeterminacy2,
)
from regulous.blowup.verdict import (
    ArcWitness,
    Verdict,
    first_witness,
    not_regulous,
    refute_by_arcs,
    regulous,
    synthesize_witness,
    unknown,
)
from regulous.config import DEFAULT_BUDGET, Budget
from regulous.errors import DimensionError

Point = tuple[Fraction, ...]


def _tag(witness: ArcWitness, index) -> ArcWitness:
    return ArcWitness(witness.base_point, witness.arcs, witness.limits, tuple(index))


def _pole_curve_witness(g: RatFun, tree: ResolutionTree, budget: Budget, monitor) -> ArcWitness | None:
    # a pole curve with a point where the numerator survives forces an infinite limit there
    points = tree.candidates.curve_points if tree.candidates is not None else ()
    for point in points:
        if g.num.evaluate(point) == 0:
            continue
        witness = first_witness(g, default_battery(point, budget.arc_height), point, monitor)
        if witness is not None:
            return witness
    return None


def _decide_coefficient(g: RatFun, index, budget: Budget, monitor) -> tuple[Verdict | None, dict[Point, Fraction]]:
    """(failing verdict or None, extension values at the indeterminacy points)."""
    tree = resolve_indeterminacy2(g, budget, monitor)
    if tree.status == RESOLVED:
        values = {}
        for point in tree.centers:
            fiber = fiber_values(tree, point)
            if not fiber.continuous:
                witness = synthesize_witness(tree, point, tuple(index), monitor)
                return not_regulous(witness, fiber, reason="non-constant exceptional fiber"), {}
            values[point] = fiber.value
        return None, values
    if tree.status == UNBOUNDED:
        point = tree.over[max(tree.charts)]
        witness = synthesize_witness(tree, point, tuple(index), monitor)
        return not_regulous(witness, reason="unbounded near (" + ",".join(map(str, point)) + f"): {tree.detail}"), {}
    if tree.status == POLE_CURVE:
        witness = _pole_curve_witness(g, tree, budget, monitor)
        if witness is not None:
            return not_regulous(_tag(witness, index), reason="pole curve"), {}
        return unknown("pole curve without a refuting arc"), {}
    witness = refute_by_arcs(g, height=budget.arc_height, monitor=monitor)
    if witness is not None:
        return not_regulous(_tag(witness, index), reason=tree.status), {}
    if tree.status == NONRATIONAL_CENTER:
        return unknown(f"non-rational center ({tree.detail})"), {}
    return unknown(f"resolution budget exceeded ({tree.detail})"), {}


def decide_regulous2(
    f: RatFun, k: int, budget: Budget = DEFAULT_BUDGET, monitor=None, min_order: int = 0
) -> Verdict:
    """
    Decides whether a plane rational function is k-regulous.

    Every jet coefficient of order <= k is resolved; the function is k-regulous iff each one is
    constant on every exceptional fiber. Coefficients of order below min_order are assumed
    already verified (used by `kmax`).

    Args:
        f: Plane rational function.
        k: Differentiability class.
        budget: Search knobs (depth, arc height).
        monitor: Optional SearchMonitor.

    Returns:
        Regulous(k) with the extension values of f at its indeterminacy points, NotRegulous with a
        witness, or Unknown.
    """
    if f.nvars != 2:
        raise DimensionError(f"plane decision needs 2 variables, got {f.nvars}")
    start = time.time()
    if f.is_polynomial:
        verdict = regulous(k, reason="polynomial")
    else:
        verdict = None
        values: dict[Point, Fraction] = {}
        for index, g in jet(f, k).coeffs.items():
            order = sum(index)
            if order < min_order and order > 0:
                continue
            failure, coefficient_values = _decide_coefficient(g, index, budget, monitor)
            if failure is not None:
                verdict = failure
                break
            if order == 0:
                values = coefficient_values
        if verdict is None:
            verdict = regulous(k, values)
    if monitor is not None:
        monitor.record_verdict(verdict.tag, f"k={k} {f}", (time.time() - start) * 1000)
    return verdict


@dataclass(frozen=True)
class KmaxResult:
    tag: str  # value | at_least | unknown | not_regulous
    value: int | None = None
    verdicts: tuple[Verdict, ...] = ()

    def to_text(self) -> str:
        match self.tag:
            case "value":
                return str(self.value)
            case "at_least":
                return f"at_least {self.value}"
            case "not_regulous":
                return "not regulous (k_max undefined)"
        reason = self.verdicts[-1].reason if self.verdicts else ""
        lower = f", regulous up to {self.value}" if self.value is not None else ""
        return f"Unknown ({reason}{lower})"

    def to_json(self) -> dict:
        return {"tag": self.tag, "value": self.value, "verdicts": [v.to_json() for v in self.verdicts]}


def kmax(f: RatFun, K: int, budget: Budget = DEFAULT_BUDGET, monitor=None) -> KmaxResult:
    """Largest k <= K with f k-regulous, found level by level."""
    if f.nvars != 2:
        raise DimensionError(f"kmax needs 2 variables, got {f.nvars}")
    if f.is_polynomial or _regular(f, budget):
        return KmaxResult("at_least", K)
    verdicts: list[Verdict] = []
    for k in range(K + 1):
        verdict = decide_regulous2(f, k, budget, monitor, min_order=k)
        verdicts.append(verdict)
        if verdict.is_regulous:
            continue
        if verdict.is_unknown:
            return KmaxResult("unknown", k - 1 if k else None, tuple(verdicts))
        if k == 0:
            return KmaxResult("not_regulous", None, tuple(verdicts))
        return KmaxResult("value", k - 1, tuple(verdicts))
    return KmaxResult("at_least", K, tuple(verdicts))


def _regular(f: RatFun, budget: Budget) -> bool:
    """Empty indeterminacy locus: the denominator has no real zeros."""
    tree = resolve_indeterminacy2(f, budget)
    return tree.status == RESOLVED and not tree.centers

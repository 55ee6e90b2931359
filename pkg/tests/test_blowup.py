from fractions import Fraction

import pytest
from conftest import SPACE

from regulous.algebra.arcs import Arc, ExtValue, arc_limit, parse_arc
from regulous.algebra.parser import parse_ratfun
from regulous.algebra.ratfun import RatFun
from regulous.blowup.charts import CHART_NAMES, blowup_point, pullback, root_chart
from regulous.blowup.decide import decide_regulous2, kmax
from regulous.blowup.resolution import (
    BUDGET_EXCEEDED,
    POLE_CURVE,
    RESOLVED,
    UNBOUNDED,
    fiber_values,
    resolve_indeterminacy2,
)
from regulous.blowup.verdict import (
    NOT_REGULOUS,
    ArcWitness,
    refute_by_arcs,
    verdict_from_summary,
    verdict_summary,
    verify_witness,
)
from regulous.config import DEFAULT_BUDGET
from regulous.errors import DimensionError, UnresolvedTreeError
from regulous.monitor import SearchMonitor

ORIGIN = (Fraction(0), Fraction(0))


def chart_fun(text: str) -> RatFun:
    return parse_ratfun(text, CHART_NAMES)


# --- charts ---------------------------------------------------------------------


def test_blowup_charts_at_origin():
    root = root_chart(("x", "y"))
    chart_a, chart_b = blowup_point(root, (0, 0))
    assert chart_a.map_to_root == (chart_fun("u"), chart_fun("u*v"))
    assert chart_b.map_to_root == (chart_fun("u*v"), chart_fun("v"))
    assert chart_a.which == "A" and chart_b.which == "B"
    assert chart_a.depth == chart_b.depth == 1
    assert [e.axis for e in chart_a.exceptional] == [0]
    assert [e.axis for e in chart_b.exceptional] == [1]


def test_blowup_away_from_origin():
    chart_a, _ = blowup_point(root_chart(("x", "y")), (1, -2))
    assert chart_a.map_to_root == (chart_fun("u + 1"), chart_fun("u*v - 2"))


def test_pullback_factors_exceptional_divisor(plane):
    chart_a, chart_b = blowup_point(root_chart(("x", "y")), (0, 0))
    assert pullback(plane("x^2+y^2"), chart_a) == chart_fun("u^2 + u^2*v^2")
    assert pullback(plane("x^3/(x^2+y^2)"), chart_a) == chart_fun("u/(1 + v^2)")
    assert pullback(plane("x^3/(x^2+y^2)"), chart_b) == chart_fun("u^3*v/(u^2 + 1)")


def test_nested_blowup_composes_maps():
    root = root_chart(("x", "y"))
    _, chart_b = blowup_point(root, (0, 0))
    chart_ba, _ = blowup_point(chart_b, (0, 0))
    assert chart_ba.map_to_root == (chart_fun("u^2*v"), chart_fun("u*v"))
    assert chart_ba.depth == 2
    # the exceptional curve v = 0 of chart B stays on the axis v = 0
    assert [e.axis for e in chart_ba.exceptional] == [0, 1]


def test_root_chart_is_planar():
    with pytest.raises(DimensionError):
        root_chart(SPACE)


# --- resolution -----------------------------------------------------------------


def test_resolution_of_isolated_point(plane):
    monitor = SearchMonitor()
    tree = resolve_indeterminacy2(plane("x^3/(x^2+y^2)"), DEFAULT_BUDGET, monitor)
    assert tree.status == RESOLVED
    assert tree.centers == [ORIGIN]
    assert tree.depth == 1
    assert len(tree.leaves) == 2
    assert monitor.blowups == 1
    fiber = fiber_values(tree, (0, 0))
    assert fiber.continuous
    assert fiber.value == 0


def test_resolution_needs_two_levels(plane):
    f = plane("x^2/(x^2+y^4)")
    tree = resolve_indeterminacy2(f)
    assert tree.status == RESOLVED
    assert tree.depth == 2
    fiber = fiber_values(tree, ORIGIN)
    assert not fiber.continuous
    shallow = resolve_indeterminacy2(f, DEFAULT_BUDGET.with_overrides(depth=1))
    assert shallow.status == BUDGET_EXCEEDED
    with pytest.raises(UnresolvedTreeError):
        fiber_values(shallow, ORIGIN)


def test_discontinuous_fiber(plane):
    tree = resolve_indeterminacy2(plane("x^2/(x^2+y^2)"))
    assert tree.status == RESOLVED
    fiber = fiber_values(tree, ORIGIN)
    assert not fiber.continuous
    assert fiber.value is None
    assert fiber.to_json()["continuous"] is False


def test_obstructions(plane):
    assert resolve_indeterminacy2(plane("1/(x^2+y^2)")).status == UNBOUNDED
    assert resolve_indeterminacy2(plane("1/x")).status == POLE_CURVE
    regular = resolve_indeterminacy2(plane("1/(x^2+y^2+1)"))
    assert regular.status == RESOLVED and not regular.centers
    with pytest.raises(UnresolvedTreeError):
        fiber_values(regular, ORIGIN)


def test_tree_json(plane):
    data = resolve_indeterminacy2(plane("x^3/(x^2+y^2)")).to_json()
    assert data["status"] == RESOLVED
    assert data["centers"] == [["0", "0"]]
    assert len(data["nodes"]) == 3
    assert sum(node["leaf"] for node in data["nodes"]) == 2


# --- decision ---------------------------------------------------------------------


@pytest.mark.parametrize("k", [0, 1, 2])
def test_k_grading(plane, k):
    f = plane(f"x^{3 + k}/(x^2+y^2)")
    assert decide_regulous2(f, k).is_regulous
    above = decide_regulous2(f, k + 1)
    assert above.tag == NOT_REGULOUS
    assert above.witness is not None
    assert any(above.witness.index)


def test_regulous_verdict_text(plane):
    verdict = decide_regulous2(plane("x^3/(x^2+y^2)"), 0)
    assert verdict.to_text(("x", "y")) == "Regulous(0), value 0 at (0,0)"
    assert verdict.values == {ORIGIN: 0}


def test_cubic_value_at_isolated_point(plane):
    verdict = decide_regulous2(plane("(y^2+x^2-x^3)/(x^2+y^2)"), 0)
    assert verdict.is_regulous
    assert verdict.values[ORIGIN] == 1


def test_not_regulous_has_checkable_witness(plane):
    f = plane("x^2/(x^2+y^4)")
    verdict = decide_regulous2(f, 0)
    assert verdict.tag == NOT_REGULOUS
    assert verify_witness(f, verdict.witness)
    assert verdict.to_text(("x", "y")).startswith("NotRegulous, witness arc")


def test_unbounded_function_is_refuted(plane):
    f = plane("1/(x^2+y^2)")
    verdict = decide_regulous2(f, 0)
    assert verdict.tag == NOT_REGULOUS
    assert verify_witness(f, verdict.witness)


def test_pole_curve_is_refuted(plane):
    verdict = decide_regulous2(plane("1/x"), 0)
    assert verdict.tag == NOT_REGULOUS


def test_polynomials_are_regulous(plane):
    verdict = decide_regulous2(plane("x^5 - y"), 3)
    assert verdict.is_regulous and verdict.k == 3


def test_plane_decision_rejects_other_dimensions():
    with pytest.raises(DimensionError):
        decide_regulous2(parse_ratfun("x/(x^2+y^2+z^2)", SPACE), 0)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_kmax_of_grading_family(plane, k):
    result = kmax(plane(f"x^{3 + k}/(x^2+y^2)"), k + 1)
    assert result.tag == "value"
    assert result.value == k
    assert result.to_text() == str(k)


def test_kmax_special_tags(plane):
    assert kmax(plane("x^2 + y^2"), 3).tag == "at_least"
    assert kmax(plane("1/(x^2+y^2+1)"), 3).to_text() == "at_least 3"
    refuted = kmax(plane("1/(x^2+y^2)"), 2)
    assert refuted.tag == "not_regulous"
    assert refuted.value is None
    bounded = kmax(plane("x^5/(x^2+y^2)"), 1)
    assert bounded.tag == "at_least" and bounded.value == 1


# --- witnesses ----------------------------------------------------------------------


def test_arc_battery_refutes_in_space():
    f = parse_ratfun("x^2/(x^2+y^2+z^2)", SPACE)
    witness = refute_by_arcs(f)
    assert witness is not None
    assert witness.base_point == (0, 0, 0)
    assert verify_witness(f, witness)


def test_arc_battery_finds_nothing_for_continuous_function(plane):
    assert refute_by_arcs(plane("x^3/(x^2+y^2)")) is None


def test_tampered_witness_is_rejected(plane):
    f = plane("x^2/(x^2+y^2)")
    witness = refute_by_arcs(f)
    assert verify_witness(f, witness)
    forged = ArcWitness(witness.base_point, witness.arcs, (witness.limits[0], witness.limits[0]))
    assert not verify_witness(f, forged)
    assert ArcWitness.from_json(witness.to_json()) == witness


def test_verdict_summary_keeps_values(plane):
    verdict = decide_regulous2(plane("(y^2+x^2-x^3)/(x^2+y^2)"), 0)
    restored = verdict_from_summary(verdict_summary(verdict))
    assert restored.is_regulous
    assert restored.values == verdict.values


def test_arc_limits_agree_with_extension_values(rng, plane):
    verdicts = {text: decide_regulous2(plane(text), 0) for text in ("x^3/(x^2+y^2)", "(y^2+x^2-x^3)/(x^2+y^2)")}
    for _ in range(200):
        text = rng.choice(sorted(verdicts))
        direction = (rng.randint(-5, 5), rng.randint(-5, 5))
        if direction == (0, 0):
            continue
        curve = Arc.line((0, 0), direction) if rng.random() < 0.5 else parse_arc(f"{direction[0]}*t, t^2")
        assert arc_limit(plane(text), curve) == ExtValue.finite(verdicts[text].values[ORIGIN])

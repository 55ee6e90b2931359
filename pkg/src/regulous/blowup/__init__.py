"""Point blow-ups of the plane, k-regulous decisions and certification in any dimension."""

from regulous.blowup.certify import Embed, Leaf, Op, certify_regulous, tree_from_json, tree_from_text
from regulous.blowup.charts import Chart, blowup_point, pullback, root_chart
from regulous.blowup.decide import KmaxResult, decide_regulous2, kmax
from regulous.blowup.resolution import FiberReport, ResolutionTree, fiber_values, resolve_indeterminacy2
from regulous.blowup.stratify import Stratification2, stratify2
from regulous.blowup.verdict import ArcWitness, Verdict, refute_by_arcs, verify_witness

__all__ = [
    "ArcWitness",
    "Chart",
    "Embed",
    "FiberReport",
    "KmaxResult",
    "Leaf",
    "Op",
    "ResolutionTree",
    "Stratification2",
    "Verdict",
    "blowup_point",
    "certify_regulous",
    "decide_regulous2",
    "fiber_values",
    "kmax",
    "pullback",
    "refute_by_arcs",
    "resolve_indeterminacy2",
    "root_chart",
    "stratify2",
    "tree_from_json",
    "tree_from_text",
    "verify_witness",
]

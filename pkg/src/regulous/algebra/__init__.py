"""Exact algebra: polynomials, rational functions, arcs and plane indeterminacy analysis."""

from regulous.algebra.arcs import Arc, ExtValue, arc_limit, default_battery, parse_arc
from regulous.algebra.candidates import CandidateReport, indeterminacy_candidates
from regulous.algebra.parser import parse_expr, parse_poly, parse_ratfun, parse_vars
from regulous.algebra.poly import (
    Poly,
    evaluate,
    exact_div,
    gcd_poly,
    partial_derivative,
    poly_arith,
    resultant,
    squarefree_part,
)
from regulous.algebra.ratfun import Jet, RatFun, glue_regular, jet, ratfun_arith, ratfun_new, substitute
from regulous.algebra.univariate import RealRoot, UniPoly, isolate_real_roots

__all__ = [
    "Arc",
    "CandidateReport",
    "ExtValue",
    "Jet",
    "Poly",
    "RatFun",
    "RealRoot",
    "UniPoly",
    "arc_limit",
    "default_battery",
    "evaluate",
    "exact_div",
    "gcd_poly",
    "glue_regular",
    "indeterminacy_candidates",
    "isolate_real_roots",
    "jet",
    "parse_arc",
    "parse_expr",
    "parse_poly",
    "parse_ratfun",
    "parse_vars",
    "partial_derivative",
    "poly_arith",
    "ratfun_arith",
    "ratfun_new",
    "resultant",
    "squarefree_part",
    "substitute",
]

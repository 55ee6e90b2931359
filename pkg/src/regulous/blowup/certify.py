"""
Compositional k-regulous certification for any number of variables.

Certification trees mirror the expression grammar (leaves, ring operations, division, integer
powers) plus explicit embeddings g(h_1, h_2) of plane functions. A node whose function depends on
at most two variables is decided completely in the plane; otherwise the closure of regulous
functions under ring operations and composition is used, and division is only accepted by a
function without real zeros.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from regulous.algebra.arcs import Arc
from regulous.algebra.candidates import real_zero_free
from regulous.algebra.parser import BinOp, Neg, Num, Pow, Var, parse_expr, parse_ratfun, to_poly
from regulous.algebra.poly import Poly
from regulous.algebra.ratfun import RatFun, compose
from regulous.algebra.univariate import UNIVARIATE_NAMES
from regulous.blowup.decide import decide_regulous2
from regulous.blowup.verdict import ArcWitness, Verdict, not_regulous, refute_by_arcs, regulous, unknown
from regulous.config import DEFAULT_BUDGET, Budget
from regulous.errors import MalformedTreeError, ZeroDenominatorError

OPS = ("add", "sub", "mul", "div", "neg", "pow")
_BINARY = {"+": "add", "-": "sub", "*": "mul", "/": "div"}


@dataclass(frozen=True)
class Leaf:
    function: RatFun


@dataclass(frozen=True)
class Op:
    op: str
    args: tuple["Node", ...]
    exponent: int | None = None


@dataclass(frozen=True)
class Embed:
    """g(images[0], images[1]) for a plane rational function g."""

    g: RatFun
    images: tuple["Node", "Node"]


Node = Union[Leaf, Op, Embed]


# --- construction -----------------------------------------------------------------


def tree_from_expr(expr, names: Sequence[str]) -> Node:
    match expr:
        case Num() | Var():
            return Leaf(RatFun(to_poly(expr, names)))
        case Neg(operand=operand):
            return Op("neg", (tree_from_expr(operand, names),))
        case Pow(base=base, exponent=exponent):
            return Op("pow", (tree_from_expr(base, names),), exponent)
        case BinOp(op=op, left=left, right=right):
            return Op(_BINARY[op], (tree_from_expr(left, names), tree_from_expr(right, names)))
    raise MalformedTreeError(f"not an expression node: {expr!r}")


def tree_from_text(text: str, names: Sequence[str]) -> Node:
    return tree_from_expr(parse_expr(text, names), names)


def tree_from_json(data: dict, names: Sequence[str]) -> Node:
    """
    Nodes are {"leaf": text}, {"op": name, "args": [...], "exponent": n} or
    {"embed": text, "vars": [a, b], "images": [node, node]}.
    """
    if "leaf" in data:
        return tree_from_text(data["leaf"], names)
    if "embed" in data:
        plane = tuple(data.get("vars", ("x", "y")))
        images = tuple(tree_from_json(image, names) for image in data.get("images", ()))
        if len(plane) != 2 or len(images) != 2:
            raise MalformedTreeError("embedding needs two plane variables and two images")
        return Embed(parse_ratfun(data["embed"], plane), images)
    if data.get("op") in OPS:
        args = tuple(tree_from_json(arg, names) for arg in data.get("args", ()))
        return Op(data["op"], args, data.get("exponent"))
    raise MalformedTreeError(f"unknown certification node {data!r}")


def tree_function(node: Node) -> RatFun:
    """The rational function a tree denotes."""
    match node:
        case Leaf(function=function):
            return function
        case Embed(g=g, images=images):
            try:
                return compose(g, [tree_function(image) for image in images])
            except ZeroDenominatorError as err:
                raise MalformedTreeError(f"undefined composition: {err}") from None
        case Op(op=op, args=args, exponent=exponent):
            _check_arity(node)
            values = [tree_function(arg) for arg in args]
            match op:
                case "add":
                    return values[0] + values[1]
                case "sub":
                    return values[0] - values[1]
                case "mul":
                    return values[0] * values[1]
                case "div":
                    if values[1].is_zero:
                        raise MalformedTreeError("division by the zero function")
                    return values[0] / values[1]
                case "neg":
                    return -values[0]
                case "pow":
                    return values[0] ** exponent
    raise MalformedTreeError(f"not a certification node: {node!r}")


def _check_arity(node: Op) -> None:
    expected = 1 if node.op in ("neg", "pow") else 2
    if node.op not in OPS:
        raise MalformedTreeError(f"unknown operation '{node.op}'")
    if len(node.args) != expected:
        raise MalformedTreeError(f"'{node.op}' takes {expected} argument(s), got {len(node.args)}")
    if node.op == "pow" and not isinstance(node.exponent, int):
        raise MalformedTreeError("'pow' needs an integer exponent")


# --- zero-free denominators ---------------------------------------------------------


def _sum_of_even_monomials(q: Poly) -> bool:
    """Positive constant plus positive multiples of even monomials: q > 0 everywhere."""
    constant = False
    for monom, coeff in q.terms():
        if coeff <= 0 or any(e % 2 for e in monom):
            return False
        constant = constant or not any(monom)
    return constant


def zero_free(q: Poly) -> bool:
    """Certified absence of real zeros (False means not certified)."""
    if q.is_zero:
        return False
    if _sum_of_even_monomials(q) or _sum_of_even_monomials(-q):
        return True
    used = sorted(q.depends_on())
    return len(used) <= 2 and real_zero_free(project_poly(q, used))


# --- plane projection ---------------------------------------------------------------


def _plane_indices(f: RatFun) -> list[int]:
    used = sorted(f.depends_on())
    for i in range(f.nvars):
        if len(used) >= 2:
            break
        if i not in used:
            used.append(i)
    return sorted(used)


def project_poly(p: Poly, indices: Sequence[int]) -> Poly:
    names = [p.names[i] for i in indices]
    while len(names) < 2:
        names.append(names[-1] + "_")
    terms = [(tuple(m[i] for i in indices) + (0,) * (2 - len(indices)), c) for m, c in p.terms()]
    return Poly.from_terms(names, terms)


def project_to_plane(f: RatFun) -> RatFun:
    """The same function written in the ring of the (at most two) variables it uses."""
    indices = _plane_indices(f)
    return RatFun(project_poly(f.num, indices), project_poly(f.den, indices))


# --- certification --------------------------------------------------------------------


def _lift_verdict(verdict: Verdict, f: RatFun) -> Verdict:
    """Plane verdict of the projection of f, restated in the ring of f."""
    if f.nvars == 2:
        return verdict
    indices = _plane_indices(f)[: f.nvars]
    witness = verdict.witness
    if witness is not None:
        zero = RatFun.const(UNIVARIATE_NAMES, 0)
        witness = ArcWitness(
            _lift_point(witness.base_point, indices, f.nvars),
            tuple(Arc(_lift_point(arc.components, indices, f.nvars, zero)) for arc in witness.arcs),
            witness.limits,
            _lift_point(witness.index, indices, f.nvars, 0),
        )
    return Verdict(verdict.tag, verdict.k, {}, witness, verdict.fiber, verdict.reason)


def _lift_point(coords, indices, n, fill=Fraction(0)) -> tuple:
    out = [fill] * n
    for i, c in zip(indices, coords):
        out[i] = c
    return tuple(out)


def _combine(k: int, verdicts: list[Verdict], reason: str) -> Verdict | None:
    if all(v.is_regulous for v in verdicts):
        return regulous(k, reason=reason)
    return None


def _certify(node: Node, k: int, budget: Budget, monitor) -> tuple[Verdict, RatFun]:
    f = tree_function(node)
    if f.is_polynomial:
        return regulous(k, reason="polynomial"), f
    plane_verdict: Verdict | None = None
    if len(f.depends_on()) <= 2:
        plane_verdict = decide_regulous2(project_to_plane(f), k, budget, monitor)
        if not plane_verdict.is_unknown:
            return _lift_verdict(plane_verdict, f), f
    result: Verdict | None = None
    match node:
        case Op(op="div", args=(numerator, denominator)):
            top, _ = _certify(numerator, k, budget, monitor)
            bottom, h = _certify(denominator, k, budget, monitor)
            if zero_free(h.num):
                result = _combine(k, [top, bottom], "quotient by a function without real zeros")
        case Op(op="pow", args=(base,), exponent=exponent) if exponent < 0:
            inner, h = _certify(base, k, budget, monitor)
            if zero_free(h.num):
                result = _combine(k, [inner], "negative power of a function without real zeros")
        case Op(args=args):
            result = _combine(k, [_certify(arg, k, budget, monitor)[0] for arg in args], f"closed under {node.op}")
        case Embed(g=g, images=images):
            outer = decide_regulous2(g, k, budget, monitor)
            inner = [_certify(image, k, budget, monitor)[0] for image in images]
            result = _combine(k, [outer, *inner], "composition of regulous functions")
    if result is not None:
        return result, f
    witness = refute_by_arcs(f, height=budget.arc_height, monitor=monitor)
    if witness is not None:
        return not_regulous(witness, reason="arc battery"), f
    if plane_verdict is not None:
        return plane_verdict, f
    return unknown("not certified compositionally and no refuting arc in the battery"), f


def certify_regulous(tree: Node | RatFun, k: int, budget: Budget = DEFAULT_BUDGET, monitor=None) -> Verdict:
    """
    Certifies k-regulousness of a certification tree.

    Polynomial subtrees are regulous of every class, subtrees in at most two variables are
    decided in the plane, ring operations and compositions of certified pieces are certified,
    and a quotient only when the denominator has no real zeros. Before answering Unknown the
    default arc battery is consulted.
    """
    node = Leaf(tree) if isinstance(tree, RatFun) else tree
    verdict, _ = _certify(node, k, budget, monitor)
    return verdict


def certify_text(text: str, names: Sequence[str], k: int, budget: Budget = DEFAULT_BUDGET, monitor=None) -> Verdict:
    return certify_regulous(tree_from_text(text, names), k, budget, monitor)


def sample_value(node: Node, point: Sequence[Fraction | int]) -> Fraction:
    return tree_function(node).evaluate(point)

"""Non-membership by vanishing orders along a line, and the non-noetherian generator family."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from regulous.algebra.arcs import Arc, arc_composition
from regulous.algebra.parser import parse_ratfun
from regulous.algebra.ratfun import RatFun

FAMILY_NAMES = ("x1", "x2")


@dataclass(frozen=True)
class OrderReport:
    line: Arc
    orders: dict[int, int]  # generator index -> order at t = 0; generators vanishing on the line are absent
    target_order: int | None  # None when the target vanishes on the line
    skipped: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "line": self.line.to_text(),
            "orders": [{"generator": i, "order": o} for i, o in sorted(self.orders.items())],
            "skipped": list(self.skipped),
            "target_order": self.target_order,
        }


@dataclass(frozen=True)
class NonMember:
    report: OrderReport

    def to_text(self) -> str:
        orders = ", ".join(str(o) for _, o in sorted(self.report.orders.items())) or "-"
        return f"NonMember: generator orders {orders}, target order {self.report.target_order}"


@dataclass(frozen=True)
class Inconclusive:
    report: OrderReport
    reason: str

    def to_text(self) -> str:
        return f"Inconclusive ({self.reason})"


def vanishing_order(f: RatFun, line: Arc) -> int | None:
    """ord_t at 0 of f along the line; None when the restriction is identically zero."""
    num, den = arc_composition(f, line)
    if num.is_zero:
        return None
    return num.order() - den.order()


def nonmembership_by_order(target: RatFun, gens: Sequence[RatFun], line: Arc) -> NonMember | Inconclusive:
    """
    Shows target is not in the ideal generated by gens when its order along the line is below
    every generator order: any combination sum h_i f_i with regulous h_i restricts to a function
    of order >= min ord(f_i).

    Raises:
        PoleError: the line lies inside the pole set of a generator or of the target.
    """
    orders: dict[int, int] = {}
    skipped = []
    for i, f in enumerate(gens):
        order = vanishing_order(f, line)
        if order is None:
            skipped.append(i)
        else:
            orders[i] = order
    target_order = vanishing_order(target, line)
    report = OrderReport(line, orders, target_order, tuple(skipped))
    if target_order is None:
        return Inconclusive(report, "target vanishes on the line")
    if orders and target_order >= min(orders.values()):
        return Inconclusive(report, f"target order {target_order} >= generator order {min(orders.values())}")
    return NonMember(report)


def family_member(k: int, i: int, names: Sequence[str] = FAMILY_NAMES) -> RatFun:
    """x2^(3+k) / (x2^2 + (x1 - i)^2)."""
    x1, x2 = names
    return parse_ratfun(f"{x2}^{3 + k}/({x2}^2 + ({x1} - {i})^2)", names)


def non_noetherian_family(k: int, m: int, names: Sequence[str] = FAMILY_NAMES) -> tuple[list[RatFun], RatFun, Arc]:
    """
    Generators f_0..f_m of a strictly increasing chain of k-regulous ideals, the next member
    f_{m+1} and the line x1 = m+1 along which orders separate them.
    """
    gens = [family_member(k, i, names) for i in range(m + 1)]
    line = Arc.line((Fraction(m + 1), Fraction(0)), (0, 1))
    return gens, family_member(k, m + 1, names), line

"""Affine charts of iterated point blow-ups of the plane."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from regulous.algebra.poly import Poly
from regulous.algebra.ratfun import RatFun, compose
from regulous.errors import DimensionError

CHART_NAMES = ("u", "v")

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class Exceptional:
    """Local equation of an exceptional curve visible in a chart: axis 0 is u = 0, axis 1 is v = 0."""

    axis: int
    tag: int  # id of the chart whose blow-up created the curve

    def to_json(self) -> dict:
        return {"equation": f"{CHART_NAMES[self.axis]}=0", "blowup": self.tag}


@dataclass(frozen=True)
class Chart:
    id: int
    parent: int | None
    which: str | None  # "A": (a+u, b+uv), "B": (a+uv, b+v)
    center: Point | None  # in parent coordinates
    map_to_root: tuple[RatFun, RatFun]
    exceptional: tuple[Exceptional, ...] = ()
    depth: int = 0

    @property
    def names(self) -> tuple[str, ...]:
        return self.map_to_root[0].names

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "parent": self.parent,
            "which_chart": self.which,
            "center": None if self.center is None else [str(c) for c in self.center],
            "map": [m.to_text() for m in self.map_to_root],
            "exceptional": [e.to_json() for e in self.exceptional],
            "depth": self.depth,
        }


def root_chart(names: Sequence[str]) -> Chart:
    """Identity chart on the original plane."""
    if len(names) != 2:
        raise DimensionError(f"blow-ups are planar, got {len(names)} variables")
    return Chart(0, None, None, None, (RatFun.var(names, 0), RatFun.var(names, 1)))


def _local_maps(center: Point) -> tuple[tuple[RatFun, RatFun], tuple[RatFun, RatFun]]:
    a, b = center
    u, v = Poly.var(CHART_NAMES, 0), Poly.var(CHART_NAMES, 1)
    chart_a = (RatFun(u + a), RatFun(u * v + b))
    chart_b = (RatFun(u * v + a), RatFun(v + b))
    return chart_a, chart_b


def blowup_point(
    chart: Chart, center: Sequence[Fraction | int], ids: tuple[int, int] | None = None
) -> tuple[Chart, Chart]:
    """
    Blows up a point of the chart. Chart A is (u, v) -> (a+u, b+uv) with new exceptional u = 0,
    chart B is (u, v) -> (a+uv, b+v) with new exceptional v = 0.

    Strict transforms of earlier exceptional curves through the center stay on their axis:
    v = 0 in chart A when b = 0, u = 0 in chart B when a = 0.
    """
    center = (Fraction(center[0]), Fraction(center[1]))
    id_a, id_b = ids if ids is not None else (2 * chart.id + 1, 2 * chart.id + 2)
    local_a, local_b = _local_maps(center)
    map_a = tuple(compose(m, local_a) for m in chart.map_to_root)
    map_b = tuple(compose(m, local_b) for m in chart.map_to_root)
    old_v = [e for e in chart.exceptional if e.axis == 1] if center[1] == 0 else []
    old_u = [e for e in chart.exceptional if e.axis == 0] if center[0] == 0 else []
    depth = chart.depth + 1
    chart_a = Chart(id_a, chart.id, "A", center, map_a, (Exceptional(0, chart.id), *old_v), depth)
    chart_b = Chart(id_b, chart.id, "B", center, map_b, (*old_u, Exceptional(1, chart.id)), depth)
    return chart_a, chart_b


def pullback(f: RatFun, chart: Chart) -> RatFun:
    """Reduced composition f o map_to_root."""
    if f.nvars != 2:
        raise DimensionError(f"pullback needs a plane function, got {f.nvars} variables")
    if chart.parent is None and chart.names == f.names:
        return f
    return compose(f, chart.map_to_root)

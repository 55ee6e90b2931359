"""
Mesh and point-cloud emission for external plotting.

Graphs are sampled on an exact rational grid over [lo, hi]^2. Poles are skipped unless the
function is a certified plane 0-regulous function, in which case the indeterminacy points get
their extension value. Vertices are emitted row-major (x outer, y inner).
"""

from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from regulous.algebra.poly import Poly
from regulous.algebra.ratfun import RatFun
from regulous.algebra.univariate import UniPoly, rational_roots
from regulous.blowup.decide import decide_regulous2
from regulous.config import DEFAULT_BUDGET, MESH_REGION, MESH_RESOLUTION, Budget
from regulous.errors import DimensionError, PoleError

FORMATS = ("obj", "csv")


def grid_axis(region: tuple[Fraction, Fraction], resolution: int) -> list[Fraction]:
    lo, hi = (Fraction(c) for c in region)
    step = (hi - lo) / resolution
    return [lo + i * step for i in range(resolution + 1)]


def sample_graph(
    f: RatFun,
    region: tuple[Fraction, Fraction] = MESH_REGION,
    resolution: int = MESH_RESOLUTION,
    budget: Budget = DEFAULT_BUDGET,
    monitor=None,
) -> np.ndarray:
    """
    Heights of the graph of a plane function on the grid, shape (resolution+1, resolution+1, 3).

    Skipped grid points have z = nan.
    """
    if f.nvars != 2:
        raise DimensionError(f"graph meshes need 2 variables, got {f.nvars}")
    values = {}
    if not f.is_polynomial:
        verdict = decide_regulous2(f, 0, budget, monitor)
        if verdict.is_regulous:
            values = verdict.values
    axis = grid_axis(region, resolution)
    heights = np.full((len(axis), len(axis), 3), np.nan)
    for i, x in enumerate(axis):
        for j, y in enumerate(axis):
            heights[i, j, 0] = float(x)
            heights[i, j, 1] = float(y)
            try:
                heights[i, j, 2] = float(f.evaluate((x, y)))
            except PoleError:
                if (x, y) in values:
                    heights[i, j, 2] = float(values[(x, y)])
    return heights


def _write_obj(heights: np.ndarray, out: Path) -> int:
    rows, cols, _ = heights.shape
    present = ~np.isnan(heights[:, :, 2])
    index = np.zeros((rows, cols), dtype=int)
    lines = []
    for i in range(rows):
        for j in range(cols):
            if present[i, j]:
                lines.append("v {:.10g} {:.10g} {:.10g}".format(*heights[i, j]))
                index[i, j] = len(lines)
    faces = 0
    for i in range(rows - 1):
        for j in range(cols - 1):
            if not present[i : i + 2, j : j + 2].all():
                continue
            a, b, c, d = index[i, j], index[i + 1, j], index[i + 1, j + 1], index[i, j + 1]
            lines.append(f"f {a} {b} {c}")
            lines.append(f"f {a} {c} {d}")
            faces += 2
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return faces


def emit_mesh(
    f: RatFun,
    out: str | Path,
    region: tuple[Fraction, Fraction] = MESH_REGION,
    resolution: int = MESH_RESOLUTION,
    fmt: str = "obj",
    budget: Budget = DEFAULT_BUDGET,
    monitor=None,
) -> int:
    """
    Writes the graph of f as a Wavefront OBJ triangle mesh or as x,y,z CSV.

    Cells touching a skipped pole are omitted from the OBJ faces.

    Returns:
        Number of vertices written.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown mesh format '{fmt}' (expected one of {', '.join(FORMATS)})")
    heights = sample_graph(f, region, resolution, budget, monitor)
    out = Path(out)
    if fmt == "obj":
        faces = _write_obj(heights, out)
    else:
        rows = heights.reshape(-1, 3)
        rows = rows[~np.isnan(rows[:, 2])]
        np.savetxt(out, rows, fmt="%.10g", delimiter=",", header="x,y,z", comments="")
        faces = 0
    vertices = int((~np.isnan(heights[:, :, 2])).sum())
    if monitor is not None:
        monitor.log_event("MESH", f"{out}: {vertices} vertices, {faces} faces")
    return vertices


def zero_cloud(
    p: Poly, region: tuple[Fraction, Fraction] = MESH_REGION, resolution: int = MESH_RESOLUTION
) -> list[tuple[Fraction, ...]]:
    """
    Exact rational points of Z(p): the leading coordinates run over the grid, the last one over
    the rational roots of the restriction. Grid points where p vanishes identically are skipped.
    """
    axis = grid_axis(region, resolution)
    last = p.nvars - 1
    cloud = []
    for head in np.ndindex(*([len(axis)] * last)):
        coords = tuple(axis[i] for i in head)
        q = p
        for var, value in enumerate(coords):
            q = q.restrict(var, value)
        u = UniPoly.from_poly(q, last)
        if u.is_zero:
            continue
        cloud.extend((*coords, root) for root in rational_roots(u))
    return cloud


def emit_zero_cloud(
    p: Poly, out: str | Path, region: tuple[Fraction, Fraction] = MESH_REGION, resolution: int = MESH_RESOLUTION
) -> int:
    """Writes the exact samples of zero_cloud as CSV, one point per line, coordinates as a/b."""
    cloud = zero_cloud(p, region, resolution)
    lines = [",".join(p.names)] + [",".join(str(c) for c in point) for point in cloud]
    Path(out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return len(cloud)


def parse_region(text: str) -> tuple[Fraction, Fraction]:
    """Parses "lo,hi" with rational bounds, lo < hi."""
    parts: Sequence[str] = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"region must be 'lo,hi', got '{text}'")
    lo, hi = (Fraction(part.strip()) for part in parts)
    if lo >= hi:
        raise ValueError(f"empty region [{lo}, {hi}]")
    return lo, hi

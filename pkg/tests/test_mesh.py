import math
from fractions import Fraction

import numpy as np
import pytest
from conftest import SPACE

from regulous.algebra.parser import parse_poly, parse_ratfun
from regulous.cli import schemas
from regulous.cli.mesh import emit_mesh, grid_axis, parse_region, sample_graph, zero_cloud
from regulous.errors import DimensionError, SchemaError


def test_grid_axis_is_exact():
    assert grid_axis((Fraction(-1), Fraction(1)), 4) == [-1, Fraction(-1, 2), 0, Fraction(1, 2), 1]


def test_sample_graph_fills_extension_values(plane):
    heights = sample_graph(plane("(y^2+x^2-x^3)/(x^2+y^2)"), resolution=2)
    assert heights.shape == (3, 3, 3)
    assert heights[1, 1].tolist() == [0.0, 0.0, 1.0]
    assert heights[2, 0, 2] == pytest.approx(0.5)


def test_sample_graph_skips_poles(plane):
    heights = sample_graph(plane("1/x"), resolution=2)
    assert np.isnan(heights[1, :, 2]).all()
    assert heights[0, 0, 2] == -1.0
    with pytest.raises(DimensionError):
        sample_graph(parse_ratfun("x*y*z", SPACE))


def test_emit_csv(tmp_path, plane):
    out = tmp_path / "graph.csv"
    assert emit_mesh(plane("1/x"), out, resolution=2, fmt="csv") == 6
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,y,z"
    assert len(lines) == 7
    assert all(math.isfinite(float(v)) for line in lines[1:] for v in line.split(","))
    with pytest.raises(ValueError):
        emit_mesh(plane("x"), out, fmt="ply")


def test_obj_omits_cells_touching_poles(tmp_path, plane):
    out = tmp_path / "graph.obj"
    assert emit_mesh(plane("1/x"), out, resolution=2) == 6
    faces = [line for line in out.read_text(encoding="utf-8").splitlines() if line.startswith("f ")]
    assert faces == []


def test_zero_cloud_is_exact():
    cloud = zero_cloud(parse_poly("x^2 + y^2 - 1", ("x", "y")), resolution=2)
    assert sorted(cloud) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert zero_cloud(parse_poly("x", ("x", "y")), resolution=2) == []


def test_parse_region():
    assert parse_region("-1/2, 3") == (Fraction(-1, 2), 3)
    for text in ("1", "2,1", "a,b"):
        with pytest.raises(ValueError):
            parse_region(text)


# --- report schemas -----------------------------------------------------------------


def test_envelope_roundtrip():
    payload = schemas.envelope("mesh", {"out": "a.obj", "format": "obj", "vertices": 9})
    text = schemas.dumps(payload)
    assert schemas.dumps(schemas.loads(text)) == text


@pytest.mark.parametrize(
    "payload, message",
    [
        ([], "not a JSON object"),
        ({"schema": 1, "command": "mesh"}, "lacks result"),
        ({"schema": 2, "command": "mesh", "result": {}}, "unsupported schema"),
        ({"schema": 1, "command": "paint", "result": {}}, "unknown command"),
        ({"schema": 1, "command": "mesh", "result": {"out": "a"}}, "lacks format, vertices"),
        ({"schema": 1, "command": "loja", "result": {"N": 2}}, "neither a certificate"),
        (
            {"schema": 1, "command": "loja", "result": {"kind": "loja", "N": 2}},
            "lacks vars, f, g, k, h, verdict, vanishing",
        ),
        ({"schema": 1, "command": "loja", "result": {"kind": "refuted"}}, "unexpected result kind 'refuted'"),
        ({"schema": 1, "command": "radmember", "result": {"kind": "refuted", "point": []}}, "lacks f_value"),
        (
            {"schema": 1, "command": "radmember", "result": {"tag": "Unknown", "reason": ""}},
            "lacks k, values, witness",
        ),
    ],
)
def test_schema_errors(payload, message):
    with pytest.raises(SchemaError, match=message):
        schemas.validate(payload)


def test_loads_rejects_invalid_json():
    with pytest.raises(SchemaError, match="not valid JSON"):
        schemas.loads("{")

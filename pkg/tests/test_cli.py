import json

import pytest

from regulous.blowup.verdict import REGULOUS
from regulous.cli import schemas
from regulous.cli.catalog import HORNED
from regulous.cli.main import EXIT_DECIDED, EXIT_ERROR, EXIT_UNKNOWN, run


def report(capsys) -> dict:
    return schemas.loads(capsys.readouterr().out)


def test_check_plane_function(capsys):
    assert run(["check", "x^3/(x^2+y^2)", "--k", "0"]) == EXIT_DECIDED
    assert capsys.readouterr().out.strip() == "Regulous(0), value 0 at (0,0)"


def test_negative_verdict_is_decided(capsys):
    assert run(["check", "x^2/(x^2+y^2)"]) == EXIT_DECIDED
    assert capsys.readouterr().out.startswith("NotRegulous")


def test_unknown_exit_code():
    assert run(["check", HORNED, "--vars", "x,y,z"]) == EXIT_UNKNOWN


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "x^"],
        ["check", "z + 1"],
        ["check", "x", "--vars", "x,x"],
        ["frobnicate"],
        ["check"],
    ],
)
def test_errors_exit_with_one_line(argv, capsys):
    assert run(argv) == EXIT_ERROR
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 1 and err[0].startswith("error: ")


def test_json_envelope(capsys):
    assert run(["check", "x^3/(x^2+y^2)", "--json"]) == EXIT_DECIDED
    payload = report(capsys)
    assert payload["command"] == "check"
    assert payload["result"]["tag"] == REGULOUS
    assert payload["result"]["k"] == 0


def test_kmax(capsys):
    assert run(["kmax", "x^4/(x^2+y^2)", "--k", "2"]) == EXIT_DECIDED
    assert capsys.readouterr().out.strip() == "kmax = 1"


def test_resolve_writes_tree(tmp_path, capsys):
    out = tmp_path / "tree.json"
    assert run(["resolve", "x^3/(x^2+y^2)", "--out", str(out)]) == EXIT_DECIDED
    text = capsys.readouterr().out
    assert "status: resolved" in text
    assert "indeterminacy points: (0,0)" in text
    assert json.loads(out.read_text(encoding="utf-8"))["status"] == "resolved"


def test_resolve_over_budget_is_unknown(capsys):
    assert run(["resolve", "x^2/(x^2+y^4)", "--budget", "1"]) == EXIT_UNKNOWN
    assert "budget_exceeded" in capsys.readouterr().out


def test_zeroset_and_stratify(capsys):
    assert run(["zeroset", "(y^2+x^2-x^3)/(x^2+y^2)"]) == EXIT_DECIDED
    assert capsys.readouterr().out.strip() == "[Z(x^3 - x^2 - y^2) \\ Z(x^2 + y^2)]"
    assert run(["stratify", "x^3/(x^2+y^2)"]) == EXIT_DECIDED
    assert capsys.readouterr().out.strip() == "{D(x^2 + y^2), ({(0,0)}, 0)}"
    assert run(["zeroset", "x^2/(x^2+y^2)"]) == EXIT_ERROR


def test_certificate_roundtrip_through_files(tmp_path, capsys):
    cert = tmp_path / "loja.json"
    assert run(["loja", "x^2+y^2", "1/(x^2+2*y^2)", "--out", str(cert)]) == EXIT_DECIDED
    assert capsys.readouterr().out.startswith("N=2")
    assert json.loads(cert.read_text(encoding="utf-8"))["kind"] == "loja"
    assert run(["verify", str(cert), "--json"]) == EXIT_DECIDED
    payload = report(capsys)
    assert payload["command"] == "nss-verify"
    assert payload["result"]["valid"] is True


def test_verify_rejects_bad_files(tmp_path, capsys):
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    assert run(["nss-verify", str(broken)]) == EXIT_ERROR
    assert run(["nss-verify", str(tmp_path / "absent.json")]) == EXIT_ERROR
    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"kind": "magic", "vars": ["x", "y"]}), encoding="utf-8")
    assert run(["nss-verify", str(unknown)]) == EXIT_ERROR
    assert "unknown certificate kind" in capsys.readouterr().err


def test_radmember(capsys):
    assert run(["radmember", "x", "x^2+y^2", "--json"]) == EXIT_DECIDED
    assert report(capsys)["result"]["N"] == 3
    assert run(["radmember", "x+1", "x"]) == EXIT_DECIDED
    assert capsys.readouterr().out.strip() == "Refuted at (0,0), f = 1"
    assert run(["radmember", "x", "x^2+y^2", "--ncap", "2"]) == EXIT_UNKNOWN


def test_order_nonmember(capsys):
    assert run(["order-nonmember", "--family", "0", "2"]) == EXIT_DECIDED
    assert capsys.readouterr().out.strip() == "NonMember: generator orders 3, 3, 3, target order 1"
    assert run(["order-nonmember", "y^2", "--gen", "y", "--line", "1, t"]) == EXIT_UNKNOWN
    assert run(["order-nonmember", "y", "--gen", "y^2", "--line", "1, t", "--json"]) == EXIT_DECIDED
    assert report(capsys)["result"]["outcome"] == "NonMember"
    assert run(["order-nonmember", "y"]) == EXIT_ERROR


def test_closure_falls_back_to_bundled_fixture(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    assert run(["closure", "ex-algo.json"]) == EXIT_DECIDED
    assert capsys.readouterr().out.strip().splitlines()[-1] == "closure: W, Z2, Z2bis, Z1 (2 passes)"
    assert run(["closure", "nowhere.json"]) == EXIT_ERROR


def test_closure_reads_local_file(tmp_path, capsys):
    path = tmp_path / "mine.json"
    data = {
        "components": [{"id": "W", "dim": 2}, {"id": "Z", "dim": 1}],
        "top": ["W"],
        "table": [{"component": "Z", "current": ["W"], "dim": 0}],
    }
    path.write_text(json.dumps(data), encoding="utf-8")
    assert run(["closure", str(path), "--json"]) == EXIT_DECIDED
    result = report(capsys)["result"]
    assert result["included"] == ["W"]
    assert result["unrefined"] == ["Z"]


def test_fixtures_subset(capsys):
    assert run(["fixtures", "--only", "closure/"]) == EXIT_DECIDED
    assert capsys.readouterr().out.strip().endswith("5/5 fixtures passed")


def test_mesh_obj(tmp_path, capsys):
    out = tmp_path / "graph.obj"
    assert run(["mesh", "x^3/(x^2+y^2)", "--out", str(out), "--resolution", "2"]) == EXIT_DECIDED
    lines = out.read_text(encoding="utf-8").splitlines()
    assert sum(line.startswith("v ") for line in lines) == 9
    assert sum(line.startswith("f ") for line in lines) == 8
    assert capsys.readouterr().out.strip() == f"wrote 9 points to {out}"


def test_mesh_zero_cloud(tmp_path):
    out = tmp_path / "cloud.csv"
    assert run(["mesh", "x - y", "--zero", "--out", str(out), "--resolution", "2"]) == EXIT_DECIDED
    assert out.read_text(encoding="utf-8").splitlines() == ["x,y", "-1,-1", "0,0", "1,1"]


def test_mesh_needs_output():
    assert run(["mesh", "x"]) == EXIT_ERROR
    assert run(["mesh", "x", "--out", "a.obj", "--region", "1,0"]) == EXIT_ERROR

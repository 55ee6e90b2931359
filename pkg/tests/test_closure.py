import json

import pytest

from regulous.cli.catalog import CLOSURE_FIXTURES, load_closure_fixture
from regulous.consets.closure import (
    REFINEMENT,
    SYM_NECESSAIRE,
    TOP,
    ArcSymIncidence,
    AuditEntry,
    closure_algorithm,
    load_incidence,
    replay,
    sym_necessaire_test,
)
from regulous.errors import IncidenceError
from regulous.monitor import SearchMonitor


def incidence(components, table, top=("W",), refinement=()):
    return ArcSymIncidence.from_json(
        {
            "components": [{"id": cid, "dim": dim} for cid, dim in components],
            "top": list(top),
            "table": [{"component": c, "current": list(cur), "dim": d} for c, cur, d in table],
            "refinement": list(refinement),
        }
    )


@pytest.mark.parametrize("name", CLOSURE_FIXTURES)
def test_bundled_fixtures(name):
    data = load_closure_fixture(name)
    inc = ArcSymIncidence.from_json(data)
    assert inc.name == name
    result = closure_algorithm(inc)
    assert list(result.included_ids) == data["expected"]["included"]
    assert result.passes == data["expected"]["passes"]
    assert replay(result.audit) == result.included_ids
    for probe in data["expected"]["sym_necessaire"]:
        assert sym_necessaire_test(probe["component"], probe["current"], inc) is probe["holds"]


def test_queries_use_the_set_at_the_start_of_the_pass():
    result = closure_algorithm(ArcSymIncidence.from_json(load_closure_fixture("ex-algo")))
    z1 = next(entry for entry in result.audit if entry.component == "Z1")
    assert z1.pass_number == 2
    assert set(z1.current) == {"W", "Z2", "Z2bis"}
    same_pass = [entry for entry in result.audit if entry.pass_number == 1]
    assert [entry.current for entry in same_pass] == [("W",), ("W",)]


def test_refinement_feeds_lower_passes():
    result = closure_algorithm(ArcSymIncidence.from_json(load_closure_fixture("cartan")))
    dropped, added = result.audit[1:]
    assert (dropped.component, dropped.rule, dropped.included, dropped.new) == ("Z", REFINEMENT, False, ("O",))
    assert (added.component, added.rule, added.included) == ("O", SYM_NECESSAIRE, True)
    assert "queued O" in dropped.to_text()
    assert result.unrefined == ()


def test_dropped_without_refinement_is_reported():
    inc = incidence([("W", 2), ("Z", 1)], [("Z", ["W"], 0)])
    result = closure_algorithm(inc)
    assert result.included_ids == ("W",)
    assert result.unrefined == ("Z",)
    assert result.to_text().endswith("no refinement data for: Z")


def test_audit_text_and_json():
    monitor = SearchMonitor()
    result = closure_algorithm(ArcSymIncidence.from_json(load_closure_fixture("whitney")), monitor)
    lines = result.to_text().splitlines()
    assert lines[0] == "pass 0  W      top (dim 2)"
    assert "dim(closure ∩ {W}) = 1, dim = 1  included" in lines[1]
    assert lines[-1] == "closure: W, Z (1 passes)"
    data = json.loads(json.dumps(result.to_json()))
    assert data["included"] == ["W", "Z"]
    entries = tuple(AuditEntry.from_json(entry) for entry in data["audit"])
    assert entries == result.audit
    assert entries[0].rule == TOP


def test_missing_entry_is_an_error():
    inc = incidence([("W", 3), ("Z2", 2), ("Z1", 1)], [("Z2", ["W"], 2)])
    with pytest.raises(IncidenceError, match="missing incidence entry for \\(Z1, \\{W,Z2\\}\\)"):
        closure_algorithm(inc)


@pytest.mark.parametrize(
    "components, table, top, message",
    [
        ([("W", 2), ("W", 1)], [], ("W",), "duplicate component"),
        ([("W", 2), ("Z", -1)], [], ("W",), "negative dim"),
        ([("W", 2), ("Z", 1)], [], ("Z",), "maximal dim"),
        ([("W", 2), ("Z", 1)], [("Z", ["W"], 2)], ("W",), "exceeds dim"),
        ([("W", 2), ("Z", 1)], [("Z", ["Q"], 1)], ("W",), "unknown component"),
        ([("W", 2)], [], (), "no top-dimensional"),
        ([("W", 2), ("Z", 1)], [("Z", ["W"], 1), ("Z", ["W"], 0)], ("W",), "duplicate incidence"),
    ],
)
def test_validation_errors(components, table, top, message):
    with pytest.raises(IncidenceError, match=message):
        incidence(components, table, top)


def test_refinement_must_lower_dimension():
    with pytest.raises(IncidenceError, match="not below"):
        incidence(
            [("W", 2), ("Z", 1)],
            [("Z", ["W"], 0)],
            refinement=[{"component": "Z", "current": ["W"], "new": [{"id": "Y", "dim": 1}]}],
        )


def test_malformed_data():
    with pytest.raises(IncidenceError, match="malformed"):
        ArcSymIncidence.from_json({"components": [{"id": "W"}], "top": ["W"], "table": []})


def test_replay_rejects_tampered_audit():
    result = closure_algorithm(ArcSymIncidence.from_json(load_closure_fixture("ex-algo")))
    top, *rest = result.audit
    stale = AuditEntry(2, "Z1", SYM_NECESSAIRE, True, 1, 1, ("W",))
    with pytest.raises(IncidenceError, match="stale"):
        replay([top, *rest[:2], stale])
    forged = AuditEntry(1, "Z2", SYM_NECESSAIRE, True, 1, 2, ("W",))
    with pytest.raises(IncidenceError, match="inclusion rule"):
        replay([top, forged])
    with pytest.raises(IncidenceError, match="out of order"):
        replay([top, rest[0], top])


def test_load_incidence(tmp_path):
    path = tmp_path / "whitney.json"
    path.write_text(json.dumps(load_closure_fixture("whitney")), encoding="utf-8")
    assert load_incidence(path).top == ("W",)
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(IncidenceError, match="not valid JSON"):
        load_incidence(broken)

import pytest

from regulous.blowup.decide import decide_regulous2, kmax
from regulous.cli.catalog import (
    CATALOG,
    CUBIC_SAMPLES,
    ORIGIN,
    cubic,
    cubic_points,
    cubic_power,
    line_bundle_exponent,
    line_bundle_section,
    replay_catalog,
)
from regulous.consets import member, zero_set2
from regulous.monitor import SearchMonitor


@pytest.mark.parametrize("fixture_id", [fixture.id for fixture in CATALOG])
def test_catalog_fixture(fixture_id):
    results = replay_catalog(only=fixture_id)
    assert [r.id for r in results] == [fixture_id]
    assert results[0].ok, results[0].detail


def test_catalog_logs_each_fixture():
    monitor = SearchMonitor()
    results = replay_catalog(monitor=monitor, only="closure/")
    assert len(results) == 5
    assert all(r.to_text().startswith("PASS") for r in results)


def test_cubic_points_lie_on_the_cubic():
    points = cubic_points(CUBIC_SAMPLES)
    assert all(y * y == x * x * (x - 1) for x, y in points)
    f = cubic()
    assert all(f.evaluate(p) == 0 for p in points)


def test_cubic_zero_set_on_the_catalog_samples():
    points = cubic_points(CUBIC_SAMPLES)
    assert len(set(points)) == 100
    zeros = zero_set2(cubic())
    assert all(member(zeros, p) for p in points)
    assert not member(zeros, ORIGIN)
    for k in (1, 2):
        powered = zero_set2(cubic_power(k))
        assert all(member(powered, p) for p in points)
        assert not member(powered, ORIGIN)


@pytest.mark.parametrize("k, ell", [(0, 1), (1, 2), (2, 2), (3, 2), (4, 3)])
def test_line_bundle_exponent(k, ell):
    assert line_bundle_exponent(k) == ell


def test_line_bundle_needs_the_larger_exponent_at_k_one():
    assert kmax(line_bundle_section(0), 1).value == 0
    assert decide_regulous2(line_bundle_section(1), 1).is_regulous

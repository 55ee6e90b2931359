"""
Replayable catalog of reference computations with recorded expectations.

Each fixture runs one pipeline end to end and compares the outcome with the expected values; the
`fixtures` command prints one status line per fixture, in catalog order.
"""

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Callable

from regulous.algebra.parser import parse_ratfun
from regulous.algebra.ratfun import RatFun
from regulous.blowup.certify import certify_text
from regulous.blowup.decide import decide_regulous2, kmax
from regulous.config import DEFAULT_BUDGET, Budget
from regulous.consets.closure import ArcSymIncidence, closure_algorithm, replay, sym_necessaire_test
from regulous.consets.sets import ConstructibleSet, member
from regulous.consets.zeroset import zero_set2
from regulous.ideals.certificates import LojaCert, RadicalCert
from regulous.ideals.nullstellensatz import verify_certificate
from regulous.ideals.orders import NonMember, non_noetherian_family, nonmembership_by_order
from regulous.ideals.search import loja_exponent, radical_membership

PLANE = ("x", "y")
SPACE = ("x", "y", "z")
ORIGIN = (Fraction(0), Fraction(0))

CLOSURE_FIXTURES = ("c-ex", "ex-algo", "cartan", "whitney", "horned")
CUBIC_SAMPLES = 100

CARTAN = "z - x^3/(x^2+y^2)"
WHITNEY = "z*x^2 - y^2"
HORNED_SURFACE = "x^2 + y^4 + y^2*z^4 + y^3*z^3 - 2*y^3*z^2"
HORNED = f"z^2*({HORNED_SURFACE})/(x^2 + y^4 + y^2*z^4)"


# --- reference functions ----------------------------------------------------------


def k_grading_member(k: int) -> RatFun:
    """x^(3+k)/(x^2+y^2): k-regulous and not (k+1)-regulous."""
    return parse_ratfun(f"x^{3 + k}/(x^2+y^2)", PLANE)


def cubic() -> RatFun:
    """(y^2+x^2-x^3)/(x^2+y^2): value 1 at the isolated point O of the cubic y^2 = x^2(x-1)."""
    return parse_ratfun("(y^2+x^2-x^3)/(x^2+y^2)", PLANE)


def cubic_power(k: int) -> RatFun:
    """1 - (1-f)^(k+1) for the cubic function f: k-regulous with the same zeros on the cubic."""
    return 1 - (1 - cubic()) ** (k + 1)


def cubic_points(count: int) -> list[tuple[Fraction, Fraction]]:
    """Rational points (1+m^2, m(1+m^2)) of y^2 = x^2(x-1), m running over simple rationals."""
    slopes: list[Fraction] = []
    q = 1
    while len(slopes) < count:
        for p in range(-3 * q, 3 * q + 1):
            m = Fraction(p, q)
            if m not in slopes:
                slopes.append(m)
        q += 1
    return [(1 + m * m, m * (1 + m * m)) for m in slopes[:count]]


def line_bundle_exponent(k: int) -> int:
    """
    Smallest l with (x^2+y^2)^l / p k-regulous at the origin. Near the origin the quotient is a
    polynomial plus the terms (2x^3)^j (x^2+y^2)^(l-1-j), j >= l, the first one of homogeneous
    degree 3l-2; it is C^(3l-3) there and no better, so l = ceil(k/3) + 1.
    """
    return -(-k // 3) + 1


def line_bundle_section(k: int) -> RatFun:
    """
    (x^2+y^2)^l ((x-1)^2+y^2)^l / (x^2(x-1)^2+y^2): the section (x^2+y^2)^l/p times the unit
    ((x-1)^2+y^2)^l of the chart avoiding (1,0). Nonvanishing and k-regulous on R^2.
    """
    ell = line_bundle_exponent(k)
    return parse_ratfun(f"(x^2+y^2)^{ell}*((x-1)^2+y^2)^{ell}/(x^2*(x-1)^2+y^2)", PLANE)


def load_closure_fixture(name: str) -> dict:
    path = resources.files("regulous") / "fixtures" / f"{name}.json"
    return json.loads(path.read_text(encoding="utf-8"))


# --- fixtures -----------------------------------------------------------------------


@dataclass(frozen=True)
class Fixture:
    id: str
    description: str
    run: Callable[[Budget, object], tuple[bool, str]]


@dataclass(frozen=True)
class FixtureResult:
    id: str
    ok: bool
    detail: str
    elapsed_ms: float = 0.0

    def to_text(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.id:<20} {self.detail}"

    def to_json(self) -> dict:
        return {"id": self.id, "ok": self.ok, "detail": self.detail}


def _k_grading(budget: Budget, monitor) -> tuple[bool, str]:
    found = []
    for k in range(3):
        result = kmax(k_grading_member(k), k + 1, budget, monitor)
        found.append(result.to_text())
        if result.tag != "value" or result.value != k:
            return False, f"k={k}: kmax {result.to_text()}"
    return True, "kmax = " + ", ".join(found)


def _cubic(budget: Budget, monitor) -> tuple[bool, str]:
    f = cubic()
    verdict = decide_regulous2(f, 0, budget, monitor)
    if not verdict.is_regulous or verdict.values.get(ORIGIN) != 1:
        return False, f"decision {verdict.to_text(PLANE)}"
    zeros = zero_set2(f, budget, monitor)
    samples = cubic_points(CUBIC_SAMPLES)
    if not all(member(zeros, p) for p in samples) or member(zeros, ORIGIN):
        return False, f"Z(f) = {zeros.to_text()} is not C minus O"
    for k in (1, 2):
        fk = cubic_power(k)
        if not decide_regulous2(fk, k, budget, monitor).is_regulous:
            return False, f"1-(1-f)^{k + 1} is not certified {k}-regulous"
        zk = zero_set2(fk, budget, monitor)
        if any(member(zk, p) != member(zeros, p) for p in [*samples, ORIGIN]):
            return False, f"Z(1-(1-f)^{k + 1}) differs from Z(f) on the samples"
    return True, f"f(O) = 1, Z(f) = {zeros.to_text()}"


def _umbrellas(budget: Budget, monitor) -> tuple[bool, str]:
    cartan = certify_text(CARTAN, SPACE, 0, budget, monitor)
    if not (cartan.is_regulous and cartan.k == 0):
        return False, f"Cartan canopy: {cartan.to_text(SPACE)}"
    whitney = parse_ratfun(WHITNEY, SPACE)
    surface = ConstructibleSet.zero_set(whitney.num)
    if not whitney.is_polynomial or not member(surface, (0, 0, -1)):
        return False, "Whitney umbrella is not the zero set of its equation"
    horned = certify_text(HORNED, SPACE, 0, budget, monitor)
    if not horned.is_unknown:
        return False, f"horned umbrella: {horned.to_text(SPACE)}"
    return True, "Cartan Regulous(0), Whitney polynomial, horned Unknown"


def _line_bundle(budget: Budget, monitor) -> tuple[bool, str]:
    for k in range(3):
        s = line_bundle_section(k)
        verdict = decide_regulous2(s, k, budget, monitor)
        if not verdict.is_regulous:
            return False, f"k={k}: {verdict.to_text(PLANE)}"
        if k == 0 and {verdict.values.get(p) for p in (ORIGIN, (Fraction(1), Fraction(0)))} != {1}:
            return False, f"extension values {verdict.to_text(PLANE)}"
    low = kmax(line_bundle_section(0), 1, budget, monitor)
    if low.tag != "value" or low.value != 0:
        return False, f"l = 1 gives kmax {low.to_text()}, expected 0"
    return True, "l = 1, 2, 2 certified for k = 0, 1, 2 (l = 1 stops at k = 0); value 1 at (0,0) and (1,0)"


def _loja(budget: Budget, monitor) -> tuple[bool, str]:
    f = parse_ratfun("x^2+y^2", PLANE)
    g = parse_ratfun("1/(x^2+2*y^2)", PLANE)
    exponents = []
    for k in range(3):
        cert = loja_exponent(f, g, k, budget=budget, monitor=monitor)
        if not isinstance(cert, LojaCert):
            return False, f"k={k}: {cert.to_text(PLANE)}"
        if k == 0 and not verify_certificate(cert, budget, monitor).valid:
            return False, "k=0 certificate does not verify"
        exponents.append(cert.N)
    if exponents != [2, 2, 3]:
        return False, f"N(k) = {exponents}"
    return True, f"N(k) = {', '.join(map(str, exponents))} for k = 0, 1, 2"


def _radical(budget: Budget, monitor) -> tuple[bool, str]:
    f = parse_ratfun("x", PLANE)
    g = parse_ratfun("x^2+y^2", PLANE)
    cert = radical_membership(f, g, 0, budget=budget, monitor=monitor)
    if not isinstance(cert, RadicalCert):
        return False, cert.to_text()
    if cert.N != 3 or cert.h != f**3 / g:
        return False, f"got {cert.to_text()}"
    naive = RadicalCert(f, g, 0, 1, f / g, cert.verdict)
    if verify_certificate(naive, budget, monitor).valid:
        return False, "N=1 certificate accepted"
    return True, f"{cert.to_text()}; N=1 rejected"


def _non_noetherian(budget: Budget, monitor) -> tuple[bool, str]:
    for k in (0, 1):
        for m in range(1, 5):
            gens, target, line = non_noetherian_family(k, m)
            outcome = nonmembership_by_order(target, gens, line)
            report = outcome.report
            if not isinstance(outcome, NonMember):
                return False, f"k={k}, m={m}: {outcome.to_text()}"
            if set(report.orders.values()) != {3 + k} or report.target_order != 1 + k:
                return False, f"k={k}, m={m}: orders {report.orders}, target {report.target_order}"
    return True, "NonMember for k = 0, 1 and m = 1..4"


def _closure(name: str) -> Callable[[Budget, object], tuple[bool, str]]:
    def run(budget: Budget, monitor) -> tuple[bool, str]:
        data = load_closure_fixture(name)
        inc = ArcSymIncidence.from_json(data)
        expected = data["expected"]
        for probe in expected.get("sym_necessaire", []):
            if sym_necessaire_test(probe["component"], probe["current"], inc) != probe["holds"]:
                return False, f"rule (1) on {probe['component']} is not {probe['holds']}"
        result = closure_algorithm(inc, monitor)
        if list(result.included_ids) != expected["included"] or result.passes != expected["passes"]:
            return False, f"closure {', '.join(result.included_ids)} in {result.passes} passes"
        if replay(result.audit) != result.included_ids:
            return False, "audit does not replay"
        return True, f"closure {', '.join(result.included_ids)} in {result.passes} passes"

    return run


CATALOG: tuple[Fixture, ...] = (
    Fixture("k-grading", "kmax of x^(3+k)/(x^2+y^2) is k", _k_grading),
    Fixture("cubic", "Z(f) = C minus its isolated point", _cubic),
    Fixture("umbrellas", "Cartan, Whitney and horned umbrellas", _umbrellas),
    Fixture("line-bundle", "nonvanishing k-regulous section", _line_bundle),
    Fixture("lojasiewicz", "exponents of (x^2+y^2, 1/(x^2+2y^2))", _loja),
    Fixture("radical", "x in Rad(x^2+y^2) with N = 3", _radical),
    Fixture("non-noetherian", "order witnesses of a strict chain", _non_noetherian),
    *(Fixture(f"closure/{name}", f"closure algorithm on {name}", _closure(name)) for name in CLOSURE_FIXTURES),
)


def replay_catalog(budget: Budget = DEFAULT_BUDGET, monitor=None, only: str | None = None) -> list[FixtureResult]:
    """Runs the catalog (or the fixtures whose id starts with `only`) in catalog order."""
    results = []
    for fixture in CATALOG:
        if only is not None and not fixture.id.startswith(only):
            continue
        start = time.time()
        ok, detail = fixture.run(budget, monitor)
        elapsed = (time.time() - start) * 1000
        if monitor is not None:
            monitor.log_event("FIXTURE", f"{fixture.id} {'ok' if ok else 'FAILED'} [{elapsed:.1f}ms]")
        results.append(FixtureResult(fixture.id, ok, detail, elapsed))
    return results

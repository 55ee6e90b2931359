"""
Certificate searches in the rings of k-regulous functions.

None of these is a decision procedure: each search tries the exponents N = 0..N_cap (or 1..N_cap)
and stops at the first candidate whose multiplier is certified, so every positive answer comes
with a certificate that `verify_certificate` re-checks from scratch.
"""

import time
from fractions import Fraction
from typing import Sequence

from regulous.algebra.candidates import indeterminacy_candidates, rational_points_on_curve, sign_battery
from regulous.algebra.poly import Poly, divides, exact_div, gcd_poly, squarefree_part
from regulous.algebra.ratfun import RatFun
from regulous.blowup.certify import certify_regulous, zero_free
from regulous.blowup.verdict import Verdict, unknown
from regulous.config import DEFAULT_BUDGET, Budget
from regulous.errors import DegenerateInputError
from regulous.ideals.certificates import LojaCert, RadicalCert, Refuted, VanishingReport

Point = tuple[Fraction, ...]


def radical_generator(fs: Sequence[RatFun]) -> RatFun:
    """f_1^2 + ... + f_m^2: a single function with the common zero set of the f_i."""
    if not fs:
        raise DegenerateInputError("radical generator of an empty family")
    total = fs[0] * fs[0]
    for f in fs[1:]:
        total = total + f * f
    return total


def zero_set_points(q: Poly, height: int) -> tuple[list[Point], bool, bool]:
    """
    Known rational points of Z(q) in the plane.

    Returns (points, curve, complete): the isolated and singular rational points, whether Z(q)
    contains a curve, and whether every isolated point is rational.
    """
    report = indeterminacy_candidates(RatFun(Poly.const(q.names, 1), q), height)
    return list(report.rational_points), report.curve_of_poles, not report.nonrational_roots


def _extension_value(h: RatFun, verdict: Verdict, point: Point) -> Fraction | None:
    if point in verdict.values:
        return verdict.values[point]
    if h.den.evaluate(point) != 0:
        return h.evaluate(point)
    return None


def vanishing_report(f: RatFun, h: RatFun, verdict: Verdict, height: int) -> VanishingReport:
    """
    Checks that the continuous extension of h vanishes on Z(f).

    On the curves of Z(f) num(h) must vanish: with s the squarefree part of num(f), the cofactor
    s / gcd(s, num(h)) may only have finitely many real zeros. At the finitely many remaining points
    (isolated zeros of f and indeterminacy points of h inside Z(f)) the extension value is read
    off the verdict.
    """
    if f.is_zero:
        return VanishingReport(complete=h.is_zero, reason="" if h.is_zero else "f vanishes everywhere")
    if f.num.is_constant:
        return VanishingReport()
    s = squarefree_part(f.num)
    if h.nvars != 2:
        # no point enumeration beyond the plane: ask for a regular h with num(s) | num(h)
        if not (h.is_polynomial or zero_free(h.den)):
            return VanishingReport(divisor=s, complete=False, reason="indeterminacy points of h not enumerable")
        if not divides(s, h.num):
            return VanishingReport(divisor=s, complete=False, reason=f"{s} does not divide the numerator of h")
        return VanishingReport(divisor=s)
    points, curve, complete = zero_set_points(s, height)
    points.extend(p for p in verdict.values if f.num.evaluate(p) == 0 and p not in points)
    divisor = None
    if curve:
        divisor = gcd_poly(s, h.num)
        rest = exact_div(s, divisor)
        if not rest.is_constant and zero_set_points(rest, height)[1]:
            reason = f"h does not vanish on the curve {rest} = 0"
            return VanishingReport(divisor=divisor, complete=False, reason=reason)
    if not complete:
        return VanishingReport(divisor=divisor, complete=False, reason="Z(f) has irrational isolated points")
    values = []
    for point in sorted(points):
        value = _extension_value(h, verdict, point)
        if value is None:
            return VanishingReport(divisor=divisor, complete=False, reason=f"no extension value at {point}")
        values.append((point, value))
    return VanishingReport(tuple(values), divisor)


def loja_exponent(
    f: RatFun, g: RatFun, k: int, n_cap: int | None = None, budget: Budget = DEFAULT_BUDGET, monitor=None
) -> LojaCert | Verdict:
    """
    Smallest N <= n_cap such that f^N * g, extended by zero on Z(f), is k-regulous.

    Args:
        f: Function whose zero set carries the poles of g.
        g: Function regulous on D(f).
        k: Differentiability class.
        n_cap: Largest exponent tried, budget.n_cap by default.
        budget: Search knobs.
        monitor: Optional SearchMonitor.

    Returns:
        A LojaCert, or an Unknown verdict explaining the last failure.

    Example:
        loja_exponent(x^2+y^2, 1/(x^2+2y^2), k=0) -> N=2, h = (x^2+y^2)^2/(x^2+2y^2)
    """
    n_cap = budget.n_cap if n_cap is None else n_cap
    start = time.time()
    last = "no exponent tried"
    power = RatFun.const(f.names, 1)
    for n in range(n_cap + 1):
        h = power * g
        power = power * f
        verdict = certify_regulous(h, k, budget, monitor)
        if not verdict.is_regulous:
            last = f"N={n}: {verdict.to_text(f.names)}"
            continue
        report = vanishing_report(f, h, verdict, budget.sample_height)
        if not report.holds:
            last = f"N={n}: extension does not vanish on Z(f) ({report.reason or 'nonzero value'})"
            continue
        cert = LojaCert(f, g, k, n, h, verdict, report)
        if monitor is not None:
            monitor.record_certificate("LOJA", f"{cert.to_text()} [{(time.time() - start) * 1000:.1f}ms]")
        return cert
    return unknown(f"no exponent up to {n_cap} ({last})")


def refutation_points(g: RatFun, height: int) -> list[Point]:
    """Rational points of Z(g) outside the poles of g: candidates, curve samples and the grid battery."""
    q = g.num
    if q.is_constant:
        return []
    points: list[Point] = []
    if q.nvars == 2:
        points.extend(zero_set_points(squarefree_part(q), height)[0])
    points.extend(rational_points_on_curve(q, height))
    points.extend(p for p in sign_battery(q.nvars) if q.evaluate(p) == 0)
    seen = []
    for p in points:
        if p not in seen and g.den.evaluate(p) != 0:
            seen.append(p)
    return seen


def radical_membership(
    f: RatFun, g: RatFun, k: int, n_cap: int | None = None, budget: Budget = DEFAULT_BUDGET, monitor=None
) -> RadicalCert | Refuted | Verdict:
    """
    Certifies f in Rad(g) by the smallest N with f^N / g k-regulous, or refutes it by a rational
    point of Z(g) where f does not vanish.

    Returns:
        RadicalCert, Refuted, or an Unknown verdict.
    """
    if g.is_zero:
        raise DegenerateInputError("radical membership in the zero ideal")
    for point in refutation_points(g, budget.sample_height):
        if f.den.evaluate(point) == 0:
            continue
        value = f.evaluate(point)
        if value != 0:
            return Refuted(point, value)
    n_cap = budget.n_cap if n_cap is None else n_cap
    last = "no exponent tried"
    for n in range(1, n_cap + 1):
        h = f**n / g
        verdict = certify_regulous(h, k, budget, monitor)
        if verdict.is_regulous:
            cert = RadicalCert(f, g, k, n, h, verdict)
            if monitor is not None:
                monitor.record_certificate("RADICAL", cert.to_text())
            return cert
        last = f"N={n}: {verdict.to_text(f.names)}"
    return unknown(f"no exponent up to {n_cap} ({last})")

"""Verification of Nullstellensatz-type certificates, including the Rabinowitsch form."""

from typing import Sequence

from regulous.algebra.ratfun import RatFun
from regulous.blowup.certify import certify_regulous
from regulous.config import DEFAULT_BUDGET, Budget
from regulous.ideals.certificates import Certificate, CertCheck, LojaCert, NssCert, RadicalCert
from regulous.ideals.search import vanishing_report

RABINOWITSCH_NAMES = ("w", "s", "r", "w0")


def _certified(multipliers: Sequence[RatFun], k: int, budget: Budget, monitor) -> CertCheck:
    for i, h in enumerate(multipliers, start=1):
        verdict = certify_regulous(h, k, budget, monitor)
        if not verdict.is_regulous:
            return CertCheck(False, f"h_{i} = {h} is not certified {k}-regulous: {verdict.to_text(h.names)}")
    return CertCheck(True)


def verify_nss_certificate(cert: NssCert, budget: Budget = DEFAULT_BUDGET, monitor=None) -> CertCheck:
    """Valid iff target^N = sum h_i f_i exactly and every h_i is certified k-regulous."""
    if len(cert.multipliers) != len(cert.generators):
        return CertCheck(False, f"{len(cert.multipliers)} multipliers for {len(cert.generators)} generators")
    if cert.N < 0:
        return CertCheck(False, f"negative exponent {cert.N}")
    residue = cert.residue
    if not residue.is_zero:
        return CertCheck(False, f"identity fails, residue {residue}")
    return _certified(cert.multipliers, cert.k, budget, monitor)


def rabinowitsch_variable(names: Sequence[str]) -> str:
    return next(name for name in RABINOWITSCH_NAMES if name not in names)


def verify_rabinowitsch_certificate(
    generators: Sequence[RatFun],
    target: RatFun,
    multipliers: Sequence[RatFun],
    k: int = 0,
    budget: Budget = DEFAULT_BUDGET,
    monitor=None,
) -> CertCheck:
    """
    Checks g_1 f_1 + ... + g_m f_m + g_{m+1} (w f - 1) = 1 in the ring with one extra variable w.

    Generators and target live in the original ring; the m+1 multipliers in the extended one
    (its variables are the original ones followed by w).
    """
    names = target.names
    extended = (*names, rabinowitsch_variable(names))
    if len(multipliers) != len(generators) + 1:
        return CertCheck(False, f"expected {len(generators) + 1} multipliers, got {len(multipliers)}")
    if any(h.names != extended for h in multipliers):
        return CertCheck(False, f"multipliers must live in the ring {extended}")
    w = RatFun.var(extended, len(names))
    total = multipliers[-1] * (w * target.extend_ring(extended) - 1)
    for h, f in zip(multipliers, generators):
        total = total + h * f.extend_ring(extended)
    if total != 1:
        return CertCheck(False, f"identity fails, left side is {total}")
    return _certified(multipliers, k, budget, monitor)


def verify_certificate(cert: Certificate, budget: Budget = DEFAULT_BUDGET, monitor=None) -> CertCheck:
    """Re-derives the identity and the regulousness verdict of any certificate from scratch."""
    match cert:
        case NssCert():
            return verify_nss_certificate(cert, budget, monitor)
        case RadicalCert(f=f, g=g, k=k, N=n, h=h):
            if n < 1 or f**n != g * h:
                return CertCheck(False, f"identity f^{n} = g*h fails")
            return _certified([h], k, budget, monitor)
        case LojaCert(f=f, g=g, k=k, N=n, h=h):
            if n < 0 or f**n * g != h:
                return CertCheck(False, f"identity f^{n}*g = h fails")
            verdict = certify_regulous(h, k, budget, monitor)
            if not verdict.is_regulous:
                return CertCheck(False, f"h is not certified {k}-regulous: {verdict.to_text(h.names)}")
            report = vanishing_report(f, h, verdict, budget.sample_height)
            if not report.holds:
                return CertCheck(False, f"extension of h does not vanish on Z(f) ({report.reason or 'nonzero value'})")
            return CertCheck(True)
    raise TypeError(f"not a certificate: {type(cert).__name__}")

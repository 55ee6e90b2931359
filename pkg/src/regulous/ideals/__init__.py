"""Certificates for the ideal theory of regulous functions."""

from regulous.ideals.certificates import (
    CertCheck,
    LojaCert,
    NssCert,
    RadicalCert,
    Refuted,
    VanishingReport,
    load_certificate,
)
from regulous.ideals.nullstellensatz import verify_certificate, verify_nss_certificate, verify_rabinowitsch_certificate
from regulous.ideals.orders import Inconclusive, NonMember, OrderReport, non_noetherian_family, nonmembership_by_order
from regulous.ideals.search import loja_exponent, radical_generator, radical_membership

__all__ = [
    "CertCheck",
    "Inconclusive",
    "LojaCert",
    "NonMember",
    "NssCert",
    "OrderReport",
    "RadicalCert",
    "Refuted",
    "VanishingReport",
    "load_certificate",
    "loja_exponent",
    "non_noetherian_family",
    "nonmembership_by_order",
    "radical_generator",
    "radical_membership",
    "verify_certificate",
    "verify_nss_certificate",
    "verify_rabinowitsch_certificate",
]

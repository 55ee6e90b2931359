"""Constructible sets, plane zero sets and the arc-symmetric closure algorithm."""

from regulous.consets.closure import (
    ArcSymIncidence,
    AuditEntry,
    ClosureResult,
    closure_algorithm,
    load_incidence,
    replay,
    sym_necessaire_test,
)
from regulous.consets.sets import ConstructibleSet, Piece, conset_algebra, member, sample_points
from regulous.consets.zeroset import ClosednessWitness, euclid_closed_probe, zero_set2

__all__ = [
    "ArcSymIncidence",
    "AuditEntry",
    "ClosednessWitness",
    "ClosureResult",
    "ConstructibleSet",
    "Piece",
    "closure_algorithm",
    "conset_algebra",
    "euclid_closed_probe",
    "load_incidence",
    "member",
    "replay",
    "sample_points",
    "sym_necessaire_test",
    "zero_set2",
]

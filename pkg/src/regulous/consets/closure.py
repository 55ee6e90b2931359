"""
Closure of the top-dimensional part W of a variety in the algebraically constructible topology,
computed from arc-symmetric incidence data.

The decomposition of V into arc-symmetric components and the dimensions of the Zariski closures
of those components intersected with unions of other components are input data. This module only
validates them and runs the combinatorial part:

    pass i looks at the components of dimension d - i, with `current` the set included so far;
    (1) Z is included when dim(closure(Z) ∩ current) = dim Z;
    (2) otherwise Z is dropped, and the lower-dimensional components its refinement entry lists
        are queued for later passes.
"""

import json
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from regulous.errors import IncidenceError

TOP = "top"
SYM_NECESSAIRE = "sym-necessaire"
REFINEMENT = "refinement"

EMPTY_DIM = -1  # table value for an empty intersection

Key = tuple[str, frozenset[str]]


@dataclass(frozen=True)
class ArcSymIncidence:
    components: dict[str, int]  # id -> dimension, declaration order
    top: tuple[str, ...]
    table: dict[Key, int]
    refinement: dict[Key, tuple[tuple[str, int], ...]] = field(default_factory=dict)
    name: str = ""

    @property
    def dim(self) -> int:
        return self.components[self.top[0]]

    def dim_of(self, component: str) -> int:
        try:
            return self.components[component]
        except KeyError:
            raise IncidenceError(f"unknown component '{component}'") from None

    def lookup(self, component: str, current) -> int:
        key = (component, frozenset(current))
        if key not in self.table:
            raise IncidenceError(f"missing incidence entry for ({component}, {_fmt_ids(key[1])})")
        return self.table[key]

    @classmethod
    def from_json(cls, data: dict) -> "ArcSymIncidence":
        """Builds and validates an incidence from its JSON form."""
        try:
            components: dict[str, int] = {}
            for entry in data["components"]:
                _declare(components, str(entry["id"]), int(entry["dim"]))
            refinement: dict[Key, tuple[tuple[str, int], ...]] = {}
            for entry in data.get("refinement", []):
                new = tuple((str(c["id"]), int(c["dim"])) for c in entry["new"])
                for cid, cdim in new:
                    _declare(components, cid, cdim)
                key = (str(entry["component"]), frozenset(map(str, entry["current"])))
                if key in refinement:
                    raise IncidenceError(f"duplicate refinement entry for ({key[0]}, {_fmt_ids(key[1])})")
                refinement[key] = new
            table: dict[Key, int] = {}
            for entry in data["table"]:
                key = (str(entry["component"]), frozenset(map(str, entry["current"])))
                if key in table:
                    raise IncidenceError(f"duplicate incidence entry for ({key[0]}, {_fmt_ids(key[1])})")
                table[key] = EMPTY_DIM if entry["dim"] is None else int(entry["dim"])
            top = tuple(str(t) for t in data["top"])
        except (KeyError, TypeError, ValueError) as e:
            raise IncidenceError(f"malformed incidence data: {e!r}") from e
        inc = cls(components, top, table, refinement, str(data.get("name", "")))
        inc.validate()
        return inc

    def validate(self) -> None:
        """Raises IncidenceError on unknown ids or inconsistent dimensions."""
        if not self.top:
            raise IncidenceError("no top-dimensional component")
        d = max(self.components.values())
        for t in self.top:
            if self.dim_of(t) != d:
                raise IncidenceError(f"top component '{t}' has dim {self.components[t]}, maximal dim is {d}")
        for (component, current), value in self.table.items():
            for c in current:
                self.dim_of(c)
            if value > self.dim_of(component):
                raise IncidenceError(
                    f"intersection dim {value} exceeds dim {self.components[component]} of '{component}'"
                )
            if value < EMPTY_DIM:
                raise IncidenceError(f"negative intersection dim {value} for '{component}'")
        for (component, current), new in self.refinement.items():
            for c in current:
                self.dim_of(c)
            for cid, cdim in new:
                if cdim >= self.dim_of(component):
                    raise IncidenceError(
                        f"refinement '{cid}' of '{component}' has dim {cdim}, not below {self.components[component]}"
                    )


def _declare(components: dict[str, int], cid: str, dim: int) -> None:
    if cid in components:
        raise IncidenceError(f"duplicate component id '{cid}'")
    if dim < 0:
        raise IncidenceError(f"component '{cid}' has negative dim {dim}")
    components[cid] = dim


def _fmt_ids(ids) -> str:
    return "{" + ",".join(sorted(ids)) + "}"


def load_incidence(path: str | Path) -> ArcSymIncidence:
    with open(path, encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise IncidenceError(f"{path}: not valid JSON ({e})") from e
    return ArcSymIncidence.from_json(data)


def sym_necessaire_test(z: str, current, inc: ArcSymIncidence) -> bool:
    """Necessary condition for Z to lie in the closure of `current`: dim(closure(Z) ∩ current) = dim Z."""
    return inc.lookup(z, current) == inc.dim_of(z)


@dataclass(frozen=True)
class AuditEntry:
    pass_number: int
    component: str
    rule: str
    included: bool
    table_dim: int
    component_dim: int
    current: tuple[str, ...] = ()
    new: tuple[str, ...] = ()

    def to_text(self) -> str:
        if self.rule == TOP:
            return f"pass 0  {self.component:<6} top (dim {self.component_dim})"
        verdict = "included" if self.included else "dropped"
        line = (
            f"pass {self.pass_number}  {self.component:<6} {self.rule:<14} "
            f"dim(closure ∩ {_fmt_ids(self.current)}) = {self.table_dim}, dim = {self.component_dim}  {verdict}"
        )
        if self.new:
            line += f", queued {', '.join(self.new)}"
        return line

    def to_json(self) -> dict:
        return {
            "pass": self.pass_number,
            "component": self.component,
            "rule": self.rule,
            "included": self.included,
            "table_dim": self.table_dim,
            "component_dim": self.component_dim,
            "current": list(self.current),
            "new": list(self.new),
        }

    @classmethod
    def from_json(cls, data: dict) -> "AuditEntry":
        return cls(
            int(data["pass"]),
            str(data["component"]),
            str(data["rule"]),
            bool(data["included"]),
            int(data["table_dim"]),
            int(data["component_dim"]),
            tuple(data.get("current", ())),
            tuple(data.get("new", ())),
        )


@dataclass(frozen=True)
class ClosureResult:
    included_ids: tuple[str, ...]
    audit: tuple[AuditEntry, ...]
    passes: int
    unrefined: tuple[str, ...] = ()  # dropped by rule (1) with no refinement data

    def to_text(self) -> str:
        lines = [entry.to_text() for entry in self.audit]
        lines.append(f"closure: {', '.join(self.included_ids)} ({self.passes} passes)")
        if self.unrefined:
            lines.append(f"no refinement data for: {', '.join(self.unrefined)}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "included": list(self.included_ids),
            "passes": self.passes,
            "unrefined": list(self.unrefined),
            "audit": [entry.to_json() for entry in self.audit],
        }


def closure_algorithm(inc: ArcSymIncidence, monitor=None) -> ClosureResult:
    """
    Runs the closure passes. Within a pass, components are taken in id order and every query
    uses the included set as it stood at the start of the pass.

    Raises:
        IncidenceError: a queried (component, current) pair has no table entry.
    """
    d = inc.dim
    included = list(inc.top)
    audit = [AuditEntry(0, w, TOP, True, d, d) for w in inc.top]
    pools: dict[int, list[str]] = defaultdict(list)
    for cid, cdim in inc.components.items():
        if cid not in inc.top and not _is_refined(inc, cid):
            pools[cdim].append(cid)
    passes = 0
    unrefined = []
    for i in range(1, d + 1):
        pool = sorted(pools.get(d - i, []))
        if not pool:
            continue
        passes = i
        current = tuple(included)
        for z in pool:
            table_dim = inc.lookup(z, current)
            if table_dim == inc.dim_of(z):
                included.append(z)
                audit.append(AuditEntry(i, z, SYM_NECESSAIRE, True, table_dim, inc.dim_of(z), current))
                continue
            new = inc.refinement.get((z, frozenset(current)), ())
            for cid, cdim in new:
                pools[cdim].append(cid)
            if not new:
                unrefined.append(z)
            rule = REFINEMENT if new else SYM_NECESSAIRE
            audit.append(
                AuditEntry(i, z, rule, False, table_dim, inc.dim_of(z), current, tuple(cid for cid, _ in new))
            )
        if monitor is not None:
            monitor.log_event("CLOSURE", f"pass {i} (dim {d - i}): included {', '.join(included)}")
    return ClosureResult(tuple(included), tuple(audit), passes, tuple(unrefined))


def _is_refined(inc: ArcSymIncidence, cid: str) -> bool:
    return any(cid == nid for new in inc.refinement.values() for nid, _ in new)


def replay(audit) -> tuple[str, ...]:
    """
    Rebuilds the included set from an audit trail, checking that every entry is consistent with
    the rules and was queried against the included set at the start of its pass.
    """
    included: list[str] = []
    snapshot: tuple[str, ...] = ()
    last_pass = 0
    for entry in audit:
        if entry.pass_number < last_pass:
            raise IncidenceError(f"audit out of order at '{entry.component}'")
        if entry.pass_number != last_pass:
            snapshot = tuple(included)
            last_pass = entry.pass_number
        if entry.rule == TOP:
            if entry.pass_number != 0:
                raise IncidenceError(f"top entry '{entry.component}' outside pass 0")
        else:
            if frozenset(entry.current) != frozenset(snapshot):
                raise IncidenceError(f"entry '{entry.component}' queried a stale current set")
            if entry.included != (entry.table_dim == entry.component_dim):
                raise IncidenceError(f"entry '{entry.component}' contradicts the inclusion rule")
        if entry.included:
            included.append(entry.component)
    return tuple(included)

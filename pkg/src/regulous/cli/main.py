"""
Command-line front end.

    regulous check "x^3/(x^2+y^2)" --vars x,y --k 0
    regulous closure fixtures/ex-algo.json
    regulous fixtures

Exit codes: 0 when a verdict was produced (negative ones included), 2 when the outcome is
Unknown, 1 on usage or input errors (one `error: ...` line on stderr).
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from regulous.algebra.arcs import parse_arc
from regulous.algebra.parser import parse_poly, parse_ratfun, parse_vars
from regulous.blowup.certify import certify_regulous, tree_from_text
from regulous.blowup.decide import decide_regulous2, kmax
from regulous.blowup.resolution import BUDGET_EXCEEDED, NONRATIONAL_CENTER, resolve_indeterminacy2
from regulous.blowup.stratify import stratify2
from regulous.blowup.verdict import Verdict
from regulous.cli import schemas
from regulous.cli.catalog import replay_catalog
from regulous.cli.mesh import FORMATS, emit_mesh, emit_zero_cloud, parse_region
from regulous.config import DEFAULT_BUDGET, MESH_REGION, MESH_RESOLUTION, Budget
from regulous.consets.closure import closure_algorithm, load_incidence
from regulous.consets.zeroset import zero_set2
from regulous.errors import RegulousError, UsageError
from regulous.ideals.certificates import load_certificate
from regulous.ideals.nullstellensatz import verify_certificate
from regulous.ideals.orders import FAMILY_NAMES, Inconclusive, non_noetherian_family, nonmembership_by_order
from regulous.ideals.search import loja_exponent, radical_membership
from regulous.monitor import SearchMonitor

EXIT_DECIDED = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 2


@dataclass
class Command:
    """A parsed subcommand with its flags and the search knobs derived from them."""

    name: str
    args: argparse.Namespace
    budget: Budget = DEFAULT_BUDGET
    monitor: SearchMonitor | None = None

    @property
    def names(self) -> tuple[str, ...]:
        return parse_vars(self.args.vars)

    def k(self, default: int = 0) -> int:
        return default if self.args.k is None else self.args.k


@dataclass
class Outcome:
    code: int
    text: str
    result: dict
    artifact: dict | None = None  # written to --out
    extra: list[str] = field(default_factory=list)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --- handlers -------------------------------------------------------------------


def _verdict_outcome(verdict: Verdict, names) -> Outcome:
    code = EXIT_UNKNOWN if verdict.is_unknown else EXIT_DECIDED
    return Outcome(code, verdict.to_text(names), verdict.to_json())


def cmd_check(cmd: Command) -> Outcome:
    names = cmd.names
    if len(names) == 2:
        verdict = decide_regulous2(parse_ratfun(cmd.args.expr, names), cmd.k(), cmd.budget, cmd.monitor)
    else:
        verdict = certify_regulous(tree_from_text(cmd.args.expr, names), cmd.k(), cmd.budget, cmd.monitor)
    return _verdict_outcome(verdict, names)


def cmd_kmax(cmd: Command) -> Outcome:
    result = kmax(parse_ratfun(cmd.args.expr, cmd.names), cmd.k(cmd.budget.k_cap), cmd.budget, cmd.monitor)
    code = EXIT_UNKNOWN if result.tag == "unknown" else EXIT_DECIDED
    return Outcome(code, f"kmax = {result.to_text()}", result.to_json())


def cmd_resolve(cmd: Command) -> Outcome:
    tree = resolve_indeterminacy2(parse_ratfun(cmd.args.expr, cmd.names), cmd.budget, cmd.monitor)
    centers = ", ".join("(" + ",".join(str(c) for c in p) + ")" for p in tree.centers) or "none"
    lines = [f"status: {tree.status}" + (f" ({tree.detail})" if tree.detail else "")]
    lines.append(f"indeterminacy points: {centers}")
    lines.append(f"charts: {len(tree.charts)}, leaves: {len(tree.leaves)}, depth: {tree.depth}")
    code = EXIT_UNKNOWN if tree.status in (BUDGET_EXCEEDED, NONRATIONAL_CENTER) else EXIT_DECIDED
    data = tree.to_json()
    return Outcome(code, "\n".join(lines), data, artifact=data)


def cmd_zeroset(cmd: Command) -> Outcome:
    zeros = zero_set2(parse_ratfun(cmd.args.expr, cmd.names), cmd.budget, cmd.monitor)
    return Outcome(EXIT_DECIDED, zeros.to_text(), zeros.to_json())


def cmd_stratify(cmd: Command) -> Outcome:
    strata = stratify2(parse_ratfun(cmd.args.expr, cmd.names), cmd.budget, cmd.monitor)
    return Outcome(EXIT_DECIDED, strata.to_text(), strata.to_json())


def _search_outcome(result, names) -> Outcome:
    if isinstance(result, Verdict):
        return Outcome(EXIT_UNKNOWN, result.to_text(names), result.to_json())
    data = result.to_json()
    artifact = data if "kind" in data and data["kind"] != "refuted" else None
    return Outcome(EXIT_DECIDED, result.to_text(), data, artifact=artifact)


def cmd_loja(cmd: Command) -> Outcome:
    names = cmd.names
    f, g = parse_ratfun(cmd.args.f, names), parse_ratfun(cmd.args.g, names)
    return _search_outcome(loja_exponent(f, g, cmd.k(), cmd.args.ncap, cmd.budget, cmd.monitor), names)


def cmd_radmember(cmd: Command) -> Outcome:
    names = cmd.names
    f, g = parse_ratfun(cmd.args.f, names), parse_ratfun(cmd.args.g, names)
    return _search_outcome(radical_membership(f, g, cmd.k(), cmd.args.ncap, cmd.budget, cmd.monitor), names)


def cmd_verify(cmd: Command) -> Outcome:
    with open(cmd.args.certificate, encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise UsageError(f"{cmd.args.certificate}: not valid JSON ({e})") from e
    check = verify_certificate(load_certificate(data), cmd.budget, cmd.monitor)
    return Outcome(EXIT_DECIDED, check.to_text(), check.to_json())


def cmd_order_nonmember(cmd: Command) -> Outcome:
    if cmd.args.family is not None:
        gens, target, line = non_noetherian_family(*cmd.args.family, FAMILY_NAMES)
    else:
        if cmd.args.target is None or not cmd.args.gen or cmd.args.line is None:
            raise UsageError("order-nonmember needs TARGET, --gen and --line, or --family K M")
        names = cmd.names
        target = parse_ratfun(cmd.args.target, names)
        gens = [parse_ratfun(text, names) for text in cmd.args.gen]
        line = parse_arc(cmd.args.line)
    outcome = nonmembership_by_order(target, gens, line)
    reason = outcome.reason if isinstance(outcome, Inconclusive) else ""
    result = {"outcome": type(outcome).__name__, "reason": reason, "report": outcome.report.to_json()}
    code = EXIT_UNKNOWN if isinstance(outcome, Inconclusive) else EXIT_DECIDED
    return Outcome(code, outcome.to_text(), result)


def _incidence_path(text: str) -> Path:
    """The given path, or the bundled fixture of the same name when the path does not exist."""
    path = Path(text)
    if path.exists():
        return path
    bundled = resources.files("regulous") / "fixtures" / f"{path.stem}.json"
    if bundled.is_file():
        return Path(str(bundled))
    raise UsageError(f"no such incidence file: {text}")


def cmd_closure(cmd: Command) -> Outcome:
    result = closure_algorithm(load_incidence(_incidence_path(cmd.args.incidence)), cmd.monitor)
    return Outcome(EXIT_DECIDED, result.to_text(), result.to_json())


def cmd_fixtures(cmd: Command) -> Outcome:
    results = replay_catalog(cmd.budget, cmd.monitor, cmd.args.only)
    ok = all(r.ok for r in results)
    lines = [r.to_text() for r in results]
    lines.append(f"{sum(r.ok for r in results)}/{len(results)} fixtures passed")
    data = {"ok": ok, "fixtures": [r.to_json() for r in results]}
    return Outcome(EXIT_DECIDED if ok else EXIT_ERROR, "\n".join(lines), data)


def cmd_mesh(cmd: Command) -> Outcome:
    if cmd.args.out is None:
        raise UsageError("mesh needs --out")
    names = cmd.names
    region = parse_region(cmd.args.region) if cmd.args.region else MESH_REGION
    if cmd.args.zero:
        fmt = "csv"
        count = emit_zero_cloud(parse_poly(cmd.args.expr, names), cmd.args.out, region, cmd.args.resolution)
    else:
        fmt = cmd.args.format
        f = parse_ratfun(cmd.args.expr, names)
        count = emit_mesh(f, cmd.args.out, region, cmd.args.resolution, fmt, cmd.budget, cmd.monitor)
    result = {"out": str(cmd.args.out), "format": fmt, "vertices": count}
    return Outcome(EXIT_DECIDED, f"wrote {count} points to {cmd.args.out}", result)


# --- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--vars", default="x,y", help="comma separated variable names (default x,y)")
    common.add_argument("--k", type=int, default=None, help="differentiability class (kmax: upper bound)")
    common.add_argument("--budget", type=int, default=None, help="maximal blow-up depth")
    common.add_argument("--ncap", type=int, default=None, help="largest exponent tried by certificate searches")
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--out", default=None, help="write the certificate, tree or mesh to this path")
    common.add_argument("--verbose", action="store_true", help="log search events to stderr")

    parser = _Parser(prog="regulous", description="Exact toolkit for regulous functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help: str, aliases=()) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help, aliases=list(aliases))
        p.set_defaults(handler=handler, name=name)
        return p

    for name, handler, text in (
        ("check", cmd_check, "decide or certify k-regulousness"),
        ("kmax", cmd_kmax, "largest k with f k-regulous"),
        ("resolve", cmd_resolve, "resolve the indeterminacy of a plane function"),
        ("zeroset", cmd_zeroset, "zero set of a plane regulous function"),
        ("stratify", cmd_stratify, "strata on which the extension is regular"),
    ):
        add(name, handler, text).add_argument("expr")

    for name, handler, text in (
        ("loja", cmd_loja, "Lojasiewicz exponent certificate for f^N g"),
        ("radmember", cmd_radmember, "certify or refute f in Rad(g)"),
    ):
        p = add(name, handler, text)
        p.add_argument("f")
        p.add_argument("g")

    add("nss-verify", cmd_verify, "verify a certificate file", aliases=("verify",)).add_argument("certificate")

    p = add("order-nonmember", cmd_order_nonmember, "non-membership by vanishing orders along a line")
    p.add_argument("target", nargs="?")
    p.add_argument("--gen", action="append", default=[], help="generator (repeatable)")
    p.add_argument("--line", help='arc in t, e.g. "2, t"')
    p.add_argument("--family", type=int, nargs=2, metavar=("K", "M"), help="use the non-noetherian family")

    add("closure", cmd_closure, "closure algorithm on an incidence file").add_argument("incidence")

    add("fixtures", cmd_fixtures, "replay the reference catalog").add_argument("--only", default=None)

    p = add("mesh", cmd_mesh, "emit a mesh of the graph or a zero-set point cloud")
    p.add_argument("expr")
    p.add_argument("--format", choices=FORMATS, default="obj")
    p.add_argument("--resolution", type=int, default=MESH_RESOLUTION)
    p.add_argument("--region", default=None, help="lo,hi (default -1,1)")
    p.add_argument("--zero", action="store_true", help="sample the zero set of a polynomial instead")
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        monitor = SearchMonitor(enable_event_logging=args.verbose)
        budget = DEFAULT_BUDGET.with_overrides(depth=args.budget, n_cap=args.ncap)
        cmd = Command(args.name, args, budget, monitor)
        outcome = args.handler(cmd)
        if outcome.artifact is not None and args.out is not None:
            Path(args.out).write_text(json.dumps(outcome.artifact, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    except (RegulousError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    if args.json:
        print(schemas.dumps(schemas.envelope(cmd.name, outcome.result)))
    else:
        print(outcome.text)
    if args.verbose:
        monitor.print_summary()
    return outcome.code


if __name__ == "__main__":
    sys.exit(run())

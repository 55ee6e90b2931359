"""
Certificate records of the ideal searches and their JSON form.

A certificate is an exact identity between rational functions plus the regulousness verdict of
its multiplier. Expressions are stored in the expression grammar over the listed variables, so a
certificate file can be checked without the search that produced it.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from regulous.algebra.parser import parse_ratfun, parse_vars
from regulous.algebra.poly import Poly
from regulous.algebra.ratfun import RatFun
from regulous.blowup.verdict import Verdict, verdict_from_summary, verdict_summary
from regulous.errors import CertificateFormatError

Point = tuple[Fraction, ...]

LOJA = "loja"
RADICAL = "radical"
NSS = "nss"


@dataclass(frozen=True)
class VanishingReport:
    """
    Evidence that the continuous extension of h vanishes on Z(f): its value at every listed
    point of Z(f) (indeterminacy points included) and, when Z(f) contains a curve, a squarefree
    divisor of f whose multiple is the numerator of h.
    """

    points: tuple[tuple[Point, Fraction], ...] = ()
    divisor: Poly | None = None
    complete: bool = True
    reason: str = ""

    @property
    def holds(self) -> bool:
        return self.complete and all(v == 0 for _, v in self.points)

    def to_json(self) -> dict:
        return {
            "points": [{"point": [str(c) for c in p], "value": str(v)} for p, v in self.points],
            "divisor": None if self.divisor is None else self.divisor.to_text(),
            "complete": self.complete,
            "reason": self.reason,
        }

    @classmethod
    def from_json(cls, data: dict, names: Sequence[str]) -> "VanishingReport":
        points = tuple(
            (tuple(Fraction(c) for c in item["point"]), Fraction(item["value"])) for item in data.get("points", ())
        )
        divisor = data.get("divisor")
        return cls(
            points=points,
            divisor=None if divisor is None else parse_ratfun(divisor, names).as_poly(),
            complete=data.get("complete", True),
            reason=data.get("reason", ""),
        )


@dataclass(frozen=True)
class LojaCert:
    """f^N * g = h with h k-regulous and vanishing on Z(f): h is the extension of f^N g by zero."""

    f: RatFun
    g: RatFun
    k: int
    N: int
    h: RatFun
    verdict: Verdict
    vanishing: VanishingReport = field(default_factory=VanishingReport)

    kind = LOJA

    def to_json(self) -> dict:
        return {
            "kind": LOJA,
            "vars": list(self.f.names),
            "f": self.f.to_text(),
            "g": self.g.to_text(),
            "k": self.k,
            "N": self.N,
            "h": self.h.to_text(),
            "verdict": verdict_summary(self.verdict),
            "vanishing": self.vanishing.to_json(),
        }

    def to_text(self) -> str:
        return f"N={self.N}, h = {self.h.to_text()}"


@dataclass(frozen=True)
class RadicalCert:
    """f^N = g * h with h k-regulous: f lies in the radical of the ideal generated by g."""

    f: RatFun
    g: RatFun
    k: int
    N: int
    h: RatFun
    verdict: Verdict

    kind = RADICAL

    def to_json(self) -> dict:
        return {
            "kind": RADICAL,
            "vars": list(self.f.names),
            "f": self.f.to_text(),
            "g": self.g.to_text(),
            "k": self.k,
            "N": self.N,
            "h": self.h.to_text(),
            "verdict": verdict_summary(self.verdict),
        }

    def to_text(self) -> str:
        return f"N={self.N}, h = {self.h.to_text()}"


@dataclass(frozen=True)
class NssCert:
    """target^N = h_1 f_1 + ... + h_m f_m with regulous multipliers h_i."""

    generators: tuple[RatFun, ...]
    target: RatFun
    N: int
    multipliers: tuple[RatFun, ...]
    k: int = 0

    kind = NSS

    @property
    def residue(self) -> RatFun:
        total = self.target**self.N
        for h, f in zip(self.multipliers, self.generators):
            total = total - h * f
        return total

    def to_json(self) -> dict:
        return {
            "kind": NSS,
            "vars": list(self.target.names),
            "generators": [f.to_text() for f in self.generators],
            "target": self.target.to_text(),
            "k": self.k,
            "N": self.N,
            "multipliers": [h.to_text() for h in self.multipliers],
            "residue": self.residue.to_text(),
        }

    def to_text(self) -> str:
        terms = " + ".join(f"({h})*({f})" for h, f in zip(self.multipliers, self.generators))
        return f"({self.target})^{self.N} = {terms}"


@dataclass(frozen=True)
class Refuted:
    """A rational point where g vanishes but f does not: f is not in Rad(g)."""

    point: Point
    f_value: Fraction

    def to_json(self) -> dict:
        return {"kind": "refuted", "point": [str(c) for c in self.point], "f_value": str(self.f_value)}

    def to_text(self) -> str:
        return "Refuted at (" + ",".join(str(c) for c in self.point) + f"), f = {self.f_value}"


@dataclass(frozen=True)
class CertCheck:
    valid: bool
    reason: str = ""

    def to_text(self) -> str:
        return "valid" if self.valid else f"invalid ({self.reason})"

    def to_json(self) -> dict:
        return {"valid": self.valid, "reason": self.reason}


Certificate = Union[LojaCert, RadicalCert, NssCert]


def load_certificate(data: dict) -> Certificate:
    """Rebuilds a certificate from its JSON form; the stored verdicts are taken as claims."""
    try:
        names = parse_vars(",".join(data["vars"]))
        kind = data["kind"]
        match kind:
            case "loja":
                return LojaCert(
                    f=parse_ratfun(data["f"], names),
                    g=parse_ratfun(data["g"], names),
                    k=int(data["k"]),
                    N=int(data["N"]),
                    h=parse_ratfun(data["h"], names),
                    verdict=verdict_from_summary(data["verdict"]),
                    vanishing=VanishingReport.from_json(data.get("vanishing", {}), names),
                )
            case "radical":
                return RadicalCert(
                    f=parse_ratfun(data["f"], names),
                    g=parse_ratfun(data["g"], names),
                    k=int(data["k"]),
                    N=int(data["N"]),
                    h=parse_ratfun(data["h"], names),
                    verdict=verdict_from_summary(data["verdict"]),
                )
            case "nss":
                generators = tuple(parse_ratfun(text, names) for text in data["generators"])
                multipliers = tuple(parse_ratfun(text, names) for text in data["multipliers"])
                target = parse_ratfun(data["target"], names)
                return NssCert(generators, target, int(data["N"]), multipliers, int(data.get("k", 0)))
    except KeyError as err:
        raise CertificateFormatError(f"certificate is missing field {err}") from None
    raise CertificateFormatError(f"unknown certificate kind '{kind}'")

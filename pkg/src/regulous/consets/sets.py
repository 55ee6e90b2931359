"""
Zariski-constructible sets as finite unions of basic pieces Z(e_1, ..., e_r) minus Z(i_1) ... Z(i_s).

Pieces are normalized syntactically (squarefree, sign-normalized polynomials, trivial conditions
dropped, empty pieces removed); two descriptions of the same set are not identified.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product
from typing import Sequence

from regulous.algebra.arcs import rationals_of_height
from regulous.algebra.candidates import indeterminacy_candidates, rational_points_on_curve
from regulous.algebra.poly import Poly, squarefree_part
from regulous.algebra.ratfun import RatFun
from regulous.errors import AmbientMismatchError, ArityError

Point = tuple[Fraction, ...]

OPERATIONS = ("union", "intersect", "complement")


@dataclass(frozen=True)
class Piece:
    equations: tuple[Poly, ...] = ()
    inequations: tuple[Poly, ...] = ()
    dim: int | None = None

    def contains(self, point: Sequence[Fraction | int]) -> bool:
        return all(e.evaluate(point) == 0 for e in self.equations) and all(
            i.evaluate(point) != 0 for i in self.inequations
        )

    def to_text(self) -> str:
        eq = ", ".join(e.to_text() for e in self.equations)
        body = f"Z({eq})" if self.equations else "R^n"
        for i in self.inequations:
            body += f" \\ Z({i.to_text()})"
        return body if self.dim is None else f"{body} [dim {self.dim}]"

    def to_json(self) -> dict:
        return {
            "equations": [e.to_text() for e in self.equations],
            "inequations": [i.to_text() for i in self.inequations],
            "dim": self.dim,
        }


def _normal(p: Poly) -> Poly:
    return p if p.is_constant else squarefree_part(p)


def normalize_piece(piece: Piece) -> Piece | None:
    """Normal form of a piece, or None when it is syntactically empty."""
    equations: dict[Poly, None] = {}
    for e in piece.equations:
        if e.is_zero:
            continue
        if e.is_constant:
            return None
        equations[_normal(e)] = None
    inequations: dict[Poly, None] = {}
    for i in piece.inequations:
        if i.is_zero:
            return None
        if i.is_constant:
            continue
        inequations[_normal(i)] = None
    return Piece(
        tuple(sorted(equations, key=Poly.to_text)),
        tuple(sorted(inequations, key=Poly.to_text)),
        piece.dim,
    )


@dataclass(frozen=True)
class ConstructibleSet:
    names: tuple[str, ...]
    pieces: tuple[Piece, ...] = ()

    @classmethod
    def of(cls, names: Sequence[str], pieces: Sequence[Piece]) -> "ConstructibleSet":
        normal = []
        for piece in pieces:
            piece = normalize_piece(piece)
            if piece is not None and piece not in normal:
                normal.append(piece)
        return cls(tuple(names), tuple(normal))

    @classmethod
    def whole(cls, names: Sequence[str]) -> "ConstructibleSet":
        return cls.of(names, [Piece(dim=len(names))])

    @classmethod
    def empty(cls, names: Sequence[str]) -> "ConstructibleSet":
        return cls(tuple(names))

    @classmethod
    def zero_set(cls, p: Poly) -> "ConstructibleSet":
        piece = normalize_piece(Piece((p,)))
        if piece is None:
            return cls.empty(p.names)
        return cls.of(p.names, [replace(piece, dim=derive_dimension(piece, p.names))])

    @classmethod
    def point(cls, names: Sequence[str], coords: Sequence[Fraction | int]) -> "ConstructibleSet":
        if len(coords) != len(names):
            raise ArityError(f"point with {len(coords)} coordinates in a ring of {len(names)} variables")
        equations = tuple(Poly.var(names, i) - Fraction(c) for i, c in enumerate(coords))
        return cls.of(names, [Piece(equations, (), 0)])

    @classmethod
    def complement_of_point(cls, names: Sequence[str], coords: Sequence[Fraction | int]) -> "ConstructibleSet":
        return conset_algebra("complement", cls.point(names, coords))

    @property
    def is_empty_description(self) -> bool:
        return not self.pieces

    def __contains__(self, point) -> bool:
        return member(self, point)

    def to_text(self) -> str:
        return " u ".join(f"[{p.to_text()}]" for p in self.pieces) or "{}"

    def to_json(self) -> dict:
        return {"vars": list(self.names), "pieces": [p.to_json() for p in self.pieces]}


def derive_dimension(piece: Piece, names: Sequence[str]) -> int | None:
    """Dimension in the two curated cases: a point (all coordinates fixed) and a plane curve with a sign change."""
    if piece.inequations:
        return None
    linear = [e for e in piece.equations if e.total_degree == 1 and len(e.depends_on()) == 1]
    if len(linear) == len(names) and len({next(iter(e.depends_on())) for e in linear}) == len(names):
        return 0
    if len(names) == 2 and len(piece.equations) == 1:
        report = indeterminacy_candidates(RatFun(Poly.const(names, 1), piece.equations[0]))
        if report.sign_witness is not None:
            return 1
    return None


def _check(a: ConstructibleSet, b: ConstructibleSet) -> None:
    if a.names != b.names:
        raise AmbientMismatchError(f"constructible sets over {a.names} and {b.names}")


def _intersect_pieces(p: Piece, q: Piece) -> Piece:
    return Piece(p.equations + q.equations, p.inequations + q.inequations)


def _complement_piece(piece: Piece) -> list[Piece]:
    """Complement of Z(E) \\ Z(I) is the union of D(e) for e in E and Z(i) for i in I."""
    return [Piece((), (e,)) for e in piece.equations] + [Piece((i,), ()) for i in piece.inequations]


def conset_algebra(op: str, a: ConstructibleSet, b: ConstructibleSet | None = None) -> ConstructibleSet:
    """
    Boolean combination of constructible sets, normalized piece by piece.

    Complements distribute over the pieces, so their size grows multiplicatively with the number
    of conditions.
    """
    match op:
        case "union":
            _check(a, b)
            return ConstructibleSet.of(a.names, a.pieces + b.pieces)
        case "intersect":
            _check(a, b)
            return ConstructibleSet.of(a.names, [_intersect_pieces(p, q) for p, q in product(a.pieces, b.pieces)])
        case "complement":
            result = ConstructibleSet.whole(a.names)
            for piece in a.pieces:
                outside = ConstructibleSet.of(a.names, _complement_piece(piece))
                result = conset_algebra("intersect", result, outside)
            return result
    raise ValueError(f"unknown set operation '{op}'")


def member(s: ConstructibleSet, point: Sequence[Fraction | int]) -> bool:
    if len(point) != len(s.names):
        raise ArityError(f"point with {len(point)} coordinates for a set in R^{len(s.names)}")
    point = tuple(Fraction(c) for c in point)
    return any(piece.contains(point) for piece in s.pieces)


def sample_points(s: ConstructibleSet, height: int = 2, limit: int = 64) -> list[Point]:
    """Rational points of s: rational points of each piece's first equation, or a grid for open pieces."""
    found: list[Point] = []
    n = len(s.names)
    for piece in s.pieces:
        if piece.equations:
            candidates = rational_points_on_curve(piece.equations[0], max(height, 2), limit)
        else:
            candidates = list(product(rationals_of_height(height), repeat=n))
        for point in candidates:
            if piece.contains(point) and point not in found:
                found.append(point)
            if len(found) >= limit:
                return found
    return found

"""Reduced rational functions p/q, substitution, jets and the regular gluing formula."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from regulous.algebra.poly import Poly, exact_div, gcd_poly
from regulous.config import EXPONENT_CAP
from regulous.errors import (
    AmbientMismatchError,
    ArityError,
    DegenerateInputError,
    ExponentOverflowError,
    PoleError,
    ZeroDenominatorError,
)

MultiIndex = tuple[int, ...]


class RatFun:
    """
    Rational function num/den in lowest terms.

    Invariants: gcd(num, den) = 1, den is primitive with positive graded-lex leading
    coefficient, zero is stored as 0/1. Constructing a RatFun always reduces.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.const(num.names, 1)
        if num.ring != den.ring:
            raise AmbientMismatchError(f"numerator ring {num.names} does not match denominator ring {den.names}")
        if den.is_zero:
            raise ZeroDenominatorError("rational function with zero denominator")
        if num.is_zero:
            self.num, self.den = num, Poly.const(num.names, 1)
            return
        if not den.is_constant:
            g = gcd_poly(num, den)
            if not g.is_constant:
                num, den = exact_div(num, g), exact_div(den, g)
        normal = den.normalized()
        scale = normal.lc / den.lc
        self.num = num.scale(scale) if scale != 1 else num
        self.den = normal

    @classmethod
    def const(cls, names: Sequence[str], value: int | Fraction) -> "RatFun":
        return cls(Poly.const(names, value))

    @classmethod
    def var(cls, names: Sequence[str], index: int) -> "RatFun":
        return cls(Poly.var(names, index))

    @property
    def names(self) -> tuple[str, ...]:
        return self.num.names

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise DegenerateInputError(f"{self} is not constant")
        return self.num.constant_value() / self.den.constant_value()

    def as_poly(self) -> Poly:
        if not self.is_polynomial:
            raise DegenerateInputError(f"{self} is not a polynomial")
        return self.num.scale(1 / self.den.constant_value())

    def depends_on(self) -> frozenset[int]:
        return self.num.depends_on() | self.den.depends_on()

    # --- field operations -----------------------------------------------------

    def _coerce(self, other) -> "RatFun":
        if isinstance(other, RatFun):
            if other.names != self.names:
                raise AmbientMismatchError(f"ring {other.names} does not match {self.names}")
            return other
        if isinstance(other, Poly):
            return RatFun(other)
        if isinstance(other, (int, Fraction)):
            return RatFun.const(self.names, other)
        raise TypeError(f"cannot combine RatFun with {type(other).__name__}")

    def __add__(self, other) -> "RatFun":
        other = self._coerce(other)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __sub__(self, other) -> "RatFun":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RatFun":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RatFun":
        other = self._coerce(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDenominatorError("division by the zero function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFun":
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> "RatFun":
        if abs(exponent) > EXPONENT_CAP:
            raise ExponentOverflowError(exponent, EXPONENT_CAP)
        if exponent >= 0:
            return RatFun(self.num**exponent, self.den**exponent)
        if self.is_zero:
            raise ZeroDenominatorError("negative power of the zero function")
        return RatFun(self.den ** (-exponent), self.num ** (-exponent))

    def diff(self, var: int) -> "RatFun":
        """Quotient rule (p'q - pq')/q^2, reduced."""
        if self.is_polynomial:
            return RatFun(self.num.diff(var), self.den)
        return RatFun(self.num.diff(var) * self.den - self.num * self.den.diff(var), self.den * self.den)

    # --- evaluation -------------------------------------------------------------

    def evaluate(self, point: Sequence[int | Fraction]) -> Fraction:
        den = self.den.evaluate(point)
        if den == 0:
            raise PoleError(f"{self} has a pole at {tuple(str(c) for c in point)}")
        return self.num.evaluate(point) / den

    def restrict(self, var: int, value: int | Fraction) -> "RatFun":
        den = self.den.restrict(var, value)
        if den.is_zero:
            raise PoleError(f"denominator of {self} vanishes identically on {self.names[var]} = {value}")
        return RatFun(self.num.restrict(var, value), den)

    def extend_ring(self, names: Sequence[str]) -> "RatFun":
        return RatFun(self.num.extend_ring(names), self.den.extend_ring(names))

    def rename(self, names: Sequence[str]) -> "RatFun":
        return RatFun(self.num.rename(names), self.den.rename(names))

    # --- protocol -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = self._coerce(other)
        return isinstance(other, RatFun) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFun({self.to_text()!r}, vars={self.names})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Text in the expression grammar; parses back to an equal RatFun."""
        if self.is_polynomial:
            return self.as_poly().to_text()
        num_text, den_text = self.num.to_text(), self.den.to_text()
        if len(self.num.terms()) > 1:
            num_text = f"({num_text})"
        if len(self.den.terms()) > 1 or "*" in den_text or "/" in den_text:
            den_text = f"({den_text})"
        return f"{num_text}/{den_text}"


def ratfun_new(p: Poly, q: Poly) -> RatFun:
    return RatFun(p, q)


def ratfun_arith(op: str, f: RatFun, g: RatFun) -> RatFun:
    """Field operation by name: add, sub, mul or div."""
    match op:
        case "add":
            return f + g
        case "sub":
            return f - g
        case "mul":
            return f * g
        case "div":
            return f / g
        case _:
            raise ValueError(f"unknown rational-function operation '{op}'")


# --- substitution -------------------------------------------------------------


def substitute_parts(p: Poly, images: Sequence[RatFun]) -> tuple[Poly, Poly]:
    """
    Unreduced composition p(images) = num / den.

    With d_i the degree of p in x_i, den is the product of den(image_i)^d_i; callers that only
    need valuations or signs skip the gcd this way.
    """
    if len(images) != p.nvars:
        raise ArityError(f"{len(images)} images for a ring of {p.nvars} variables")
    if not images:
        raise ArityError("substitution needs at least one image")
    names = images[0].names
    if any(image.names != names for image in images):
        raise AmbientMismatchError("substitution images live in different rings")
    degrees = [max(p.degree_in(i), 0) for i in range(p.nvars)]
    num_powers = [_powers(image.num, d) for image, d in zip(images, degrees)]
    den_powers = [_powers(image.den, d) for image, d in zip(images, degrees)]
    total = Poly.zero(names)
    for monom, coeff in p.terms():
        term = Poly.const(names, coeff)
        for i, e in enumerate(monom):
            if degrees[i]:
                term = term * num_powers[i][e] * den_powers[i][degrees[i] - e]
        total = total + term
    den = Poly.const(names, 1)
    for i, d in enumerate(degrees):
        if d:
            den = den * den_powers[i][d]
    return total, den


def _powers(base: Poly, top: int) -> list[Poly]:
    out = [Poly.const(base.names, 1)]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


def substitute(p: Poly, images: Sequence[RatFun]) -> RatFun:
    """Composition p(images), reduced."""
    num, den = substitute_parts(p, images)
    return RatFun(num, den)


def compose(f: RatFun, images: Sequence[RatFun]) -> RatFun:
    """Composition f(images); raises if the denominator of f composes to zero."""
    num, num_den = substitute_parts(f.num, images)
    den, den_den = substitute_parts(f.den, images)
    if den.is_zero:
        raise ZeroDenominatorError(f"denominator of {f} vanishes identically on the substituted images")
    return RatFun(num * den_den, den * num_den)


# --- gluing -------------------------------------------------------------------


def glue_regular(pieces: Sequence[tuple[Poly, Poly, Poly]]) -> RatFun:
    """Single fraction (sum s_i^2 p_i q_i) / (sum s_i^2 q_i^2) for local representations p_i/q_i."""
    if not pieces:
        raise DegenerateInputError("gluing needs at least one piece")
    names = pieces[0][0].names
    num, den = Poly.zero(names), Poly.zero(names)
    for p, q, s in pieces:
        if q.is_zero or s.is_zero:
            raise DegenerateInputError("gluing pieces need nonzero q_i and s_i")
        weight = s * s
        num = num + weight * p * q
        den = den + weight * q * q
    return RatFun(num, den)


# --- jets ---------------------------------------------------------------------


@dataclass(frozen=True)
class Jet:
    """All partial derivatives of order at most `order`, keyed by multi-index."""

    order: int
    coeffs: dict[MultiIndex, RatFun]

    @property
    def function(self) -> RatFun:
        return self.coeffs[next(iter(self.coeffs))]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [
                {"index": list(index), "num": f.num.to_text(), "den": f.den.to_text()}
                for index, f in self.coeffs.items()
            ],
        }


def multi_indices(nvars: int, order: int) -> list[MultiIndex]:
    """Multi-indices of total degree <= order, by degree then descending lex."""
    out = []
    for total in range(order + 1):
        level = [index for index in product(range(total + 1), repeat=nvars) if sum(index) == total]
        out.extend(sorted(level, reverse=True))
    return out


def jet(f: RatFun, k: int) -> Jet:
    if k < 0:
        raise DegenerateInputError(f"jet order must be nonnegative, got {k}")
    coeffs: dict[MultiIndex, RatFun] = {}
    for index in multi_indices(f.nvars, k):
        if not any(index):
            coeffs[index] = f
            continue
        var = next(i for i, e in enumerate(index) if e)
        parent = tuple(e - 1 if i == var else e for i, e in enumerate(index))
        coeffs[index] = coeffs[parent].diff(var)
    return Jet(k, coeffs)

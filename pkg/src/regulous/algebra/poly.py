"""Exact sparse multivariate polynomials over Q.

Thin immutable wrapper around sympy's sparse ``PolyRing`` with ``QQ`` coefficients and
graded-lex order. Everything that needs a polynomial in this package goes through `Poly`:
the wrapper adds ambient checks, size budgets, the canonical text form and sign
normalization on top of the sympy element.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from regulous.config import COEFFICIENT_BITS_CAP, EXPONENT_CAP
from regulous.errors import AmbientMismatchError, ArityError, BudgetError, DegenerateInputError, ExponentOverflowError

Rational = Fraction
Monomial = tuple[int, ...]


@lru_cache(maxsize=None)
def poly_ring(names: tuple[str, ...]) -> PolyRing:
    """Returns the (cached) ring Q[names] with graded-lex order."""
    return PolyRing(names, QQ, grlex)


def to_qq(value: int | Fraction):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


class Poly:
    """Polynomial in an ordered ambient ring Q[x_1, ..., x_n]; immutable."""

    __slots__ = ("_e",)

    def __init__(self, element: PolyElement):
        self._e = element

    # --- construction -------------------------------------------------------

    @classmethod
    def zero(cls, names: Sequence[str]) -> "Poly":
        return cls(poly_ring(tuple(names)).zero)

    @classmethod
    def const(cls, names: Sequence[str], value: int | Fraction) -> "Poly":
        return cls(poly_ring(tuple(names)).ground_new(to_qq(value)))

    @classmethod
    def var(cls, names: Sequence[str], index: int) -> "Poly":
        return cls(poly_ring(tuple(names)).gens[index])

    @classmethod
    def from_terms(cls, names: Sequence[str], terms: Iterable[tuple[Monomial, int | Fraction]]) -> "Poly":
        ring = poly_ring(tuple(names))
        rep: dict[Monomial, object] = {}
        for monom, coeff in terms:
            if len(monom) != ring.ngens:
                raise ArityError(f"monomial {monom} does not fit ring of {ring.ngens} variables")
            rep[tuple(monom)] = rep.get(tuple(monom), QQ.zero) + to_qq(coeff)
        return cls(ring.from_dict({m: c for m, c in rep.items() if c}))

    # --- ambient ------------------------------------------------------------

    @property
    def element(self) -> PolyElement:
        return self._e

    @property
    def ring(self) -> PolyRing:
        return self._e.ring

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(str(s) for s in self._e.ring.symbols)

    @property
    def nvars(self) -> int:
        return self._e.ring.ngens

    def _wrap_like(self, value) -> "Poly":
        if isinstance(value, Poly):
            if value.ring != self.ring:
                raise AmbientMismatchError(f"ring {value.names} does not match {self.names}")
            return value
        if isinstance(value, (int, Fraction)):
            return Poly(self.ring.ground_new(to_qq(value)))
        raise TypeError(f"cannot combine Poly with {type(value).__name__}")

    # --- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical (graded-lex, descending) order."""
        return [(monom, to_fraction(coeff)) for monom, coeff in self._e.terms()]

    @property
    def is_zero(self) -> bool:
        return not self._e

    @property
    def is_constant(self) -> bool:
        return self._e.is_ground

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise DegenerateInputError(f"{self} is not constant")
        return to_fraction(self._e.coeff(1)) if self._e else Fraction(0)

    @property
    def lc(self) -> Fraction:
        """Leading coefficient in graded-lex order (0 for the zero polynomial)."""
        return to_fraction(self._e.LC)

    def degree_in(self, var: int) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self._e:
            return -1
        return max(monom[var] for monom in self._e.keys())

    @property
    def total_degree(self) -> int:
        if not self._e:
            return -1
        return max(sum(monom) for monom in self._e.keys())

    def depends_on(self) -> frozenset[int]:
        used = set()
        for monom in self._e.keys():
            used.update(i for i, e in enumerate(monom) if e)
        return frozenset(used)

    def max_coefficient_bits(self) -> int:
        bits = 0
        for coeff in self._e.values():
            bits = max(bits, int(coeff.numerator).bit_length(), int(coeff.denominator).bit_length())
        return bits

    # --- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "Poly":
        return Poly(self._e + self._wrap_like(other)._e)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return Poly(self._e - self._wrap_like(other)._e)

    def __rsub__(self, other) -> "Poly":
        return Poly(self._wrap_like(other)._e - self._e)

    def __neg__(self) -> "Poly":
        return Poly(-self._e)

    def __mul__(self, other) -> "Poly":
        return _check_bits(Poly(self._e * self._wrap_like(other)._e), "mul")

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise DegenerateInputError(f"polynomial exponent must be a nonnegative integer, got {exponent}")
        if exponent > EXPONENT_CAP:
            raise ExponentOverflowError(exponent, EXPONENT_CAP)
        return _check_bits(Poly(self._e**exponent), "pow")

    def scale(self, factor: int | Fraction) -> "Poly":
        return Poly(self._e.mul_ground(to_qq(factor)))

    def diff(self, var: int) -> "Poly":
        return Poly(self._e.diff(self.ring.gens[var]))

    def restrict(self, var: int, value: int | Fraction) -> "Poly":
        """Substitutes a rational value for one variable, staying in the same ring."""
        result = self._e.subs(self.ring.gens[var], to_qq(value))
        if not isinstance(result, PolyElement):
            # single-variable rings hand back a ground element
            result = self.ring.ground_new(result)
        return Poly(result)

    def evaluate(self, point: Sequence[int | Fraction]) -> Fraction:
        if len(point) != self.nvars:
            raise ArityError(f"point has {len(point)} coordinates, ring has {self.nvars} variables")
        if not self._e:
            return Fraction(0)
        value = self._e.evaluate([(gen, to_qq(c)) for gen, c in zip(self.ring.gens, point)])
        return to_fraction(value)

    def normalized(self) -> "Poly":
        """Primitive integer associate with positive leading coefficient (graded lex)."""
        if not self._e:
            return self
        coeffs = [to_fraction(c) for c in self._e.values()]
        scale = Fraction(lcm(*(c.denominator for c in coeffs)), gcd(*(c.numerator for c in coeffs)))
        if self.lc < 0:
            scale = -scale
        return self if scale == 1 else self.scale(scale)

    def extend_ring(self, names: Sequence[str]) -> "Poly":
        """Embeds into a ring whose variables are a superset of ours, matched by name."""
        missing = set(self.names) - set(names)
        if missing:
            raise AmbientMismatchError(f"target ring {tuple(names)} lacks variables {sorted(missing)}")
        return Poly(self._e.set_ring(poly_ring(tuple(names))))

    def rename(self, names: Sequence[str]) -> "Poly":
        """Same terms, positionally re-labelled variables."""
        if len(names) != self.nvars:
            raise ArityError(f"{len(names)} names for a ring of {self.nvars} variables")
        return Poly.from_terms(names, self.terms())

    # --- protocol -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.constant_value() == other
        return isinstance(other, Poly) and self.ring == other.ring and self._e == other._e

    def __hash__(self) -> int:
        return hash(self._e)

    def __bool__(self) -> bool:
        return bool(self._e)

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r}, vars={self.names})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Canonical serialization: graded-lex order, explicit ^ and *, rationals as a/b."""
        if not self._e:
            return "0"
        names = self.names
        out = []
        for monom, coeff in self.terms():
            factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, monom) if e]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            if not out:
                out.append(f"-{body}" if coeff < 0 else body)
            else:
                out.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(out)


def _check_bits(p: Poly, operation: str) -> Poly:
    if p.max_coefficient_bits() > COEFFICIENT_BITS_CAP:
        raise BudgetError(f"{operation} produced coefficients beyond {COEFFICIENT_BITS_CAP} bits")
    return p


def _check_ambient(a: Poly, b: Poly) -> None:
    if a.ring != b.ring:
        raise AmbientMismatchError(f"ring {a.names} does not match {b.names}")


def poly_arith(op: str, a: Poly, b: "Poly | int | None" = None) -> Poly:
    """Ring operation by name: add, sub, mul, pow (b is the exponent) or neg."""
    match op:
        case "add":
            _check_ambient(a, b)
            return a + b
        case "sub":
            _check_ambient(a, b)
            return a - b
        case "mul":
            _check_ambient(a, b)
            return a * b
        case "pow":
            return a**b
        case "neg":
            return -a
        case _:
            raise ValueError(f"unknown polynomial operation '{op}'")


def partial_derivative(p: Poly, var: int) -> Poly:
    if not 0 <= var < p.nvars:
        raise ArityError(f"variable index {var} outside ring of {p.nvars} variables")
    return p.diff(var)


def evaluate(p: Poly, point: Sequence[int | Fraction]) -> Fraction:
    return p.evaluate(point)


def divides(a: Poly, b: Poly) -> bool:
    """True iff a divides b exactly."""
    _check_ambient(a, b)
    if a.is_zero:
        return b.is_zero
    _, remainder = b.element.div(a.element)
    return not remainder


def exact_div(a: Poly, b: Poly) -> Poly:
    """Exact quotient a / b; raises if b does not divide a."""
    _check_ambient(a, b)
    if b.is_zero:
        raise DegenerateInputError("exact division by the zero polynomial")
    try:
        return Poly(a.element.exquo(b.element))
    except ExactQuotientFailed:
        raise DegenerateInputError(f"{b} does not divide {a}") from None


def gcd_poly(a: Poly, b: Poly) -> Poly:
    """Normalized gcd via primitive parts and subresultant PRS, recursing on the variables."""
    _check_ambient(a, b)
    if a.is_zero:
        return b.normalized()
    if b.is_zero:
        return a.normalized()
    h, _, _ = a.ring.dmp_ff_prs_gcd(a.element, b.element)
    return Poly(h).normalized()


def squarefree_part(p: Poly) -> Poly:
    """Product of the distinct irreducible factors: p / gcd(p, dp/dx_1, ..., dp/dx_n)."""
    if p.is_zero:
        raise DegenerateInputError("squarefree part of the zero polynomial")
    g = p
    for var in range(p.nvars):
        derivative = p.diff(var)
        if not derivative.is_zero:
            g = gcd_poly(g, derivative)
    return exact_div(p, g).normalized()


def resultant(a: Poly, b: Poly, var: int) -> Poly:
    """Sylvester resultant eliminating one variable; result lives in the same ring."""
    _check_ambient(a, b)
    da, db = a.degree_in(var), b.degree_in(var)
    if a.is_zero or b.is_zero or (da <= 0 and db <= 0):
        raise DegenerateInputError(f"resultant in {a.names[var]} needs a non-constant operand")
    if db == 0:
        return b**da
    if da == 0:
        return a**db
    names = a.names
    order = (names[var],) + tuple(name for i, name in enumerate(names) if i != var)
    eliminating = poly_ring(order)
    res = eliminating.dmp_resultant(a.element.set_ring(eliminating), b.element.set_ring(eliminating))
    if isinstance(res, PolyElement):
        return Poly(res.set_ring(a.ring))
    return Poly.const(names, to_fraction(res))

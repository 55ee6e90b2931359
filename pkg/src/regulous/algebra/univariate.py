"""Dense univariate polynomials over Q and exact real-root isolation (Sturm sequences)."""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Sequence

from regulous.algebra.poly import Poly, poly_ring, to_fraction
from regulous.errors import DegenerateInputError

UNIVARIATE_NAMES = ("t",)


@dataclass(frozen=True)
class UniPoly:
    """Coefficients lowest degree first, trailing zeros stripped (zero polynomial = ())."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_poly(cls, p: Poly, var: int | None = None) -> "UniPoly":
        """Reads a polynomial depending on at most one variable (var, or the only one used)."""
        used = p.depends_on()
        if var is None:
            if len(used) > 1:
                raise DegenerateInputError(f"{p} depends on more than one variable")
            var = next(iter(used), 0)
        elif used - {var}:
            raise DegenerateInputError(f"{p} depends on variables other than {p.names[var]}")
        coeffs = [Fraction(0)] * (max(p.degree_in(var), -1) + 1)
        for monom, coeff in p.terms():
            coeffs[monom[var]] = coeff
        return cls(tuple(coeffs))

    def to_poly(self, names: Sequence[str] = UNIVARIATE_NAMES, var: int = 0) -> Poly:
        width = len(names)
        terms = []
        for degree, coeff in enumerate(self.coeffs):
            if coeff:
                monom = [0] * width
                monom[var] = degree
                terms.append((tuple(monom), coeff))
        return Poly.from_terms(names, terms)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def order(self) -> int:
        """Vanishing order at 0; -1 for the zero polynomial."""
        for degree, coeff in enumerate(self.coeffs):
            if coeff:
                return degree
        return -1

    def evaluate(self, x: Fraction | int) -> Fraction:
        value = Fraction(0)
        for coeff in reversed(self.coeffs):
            value = value * x + coeff
        return value

    def sign_at(self, x: Fraction | int) -> int:
        value = self.evaluate(x)
        return (value > 0) - (value < 0)


@dataclass(frozen=True)
class RealRoot:
    """Either an exact rational root or an open isolating interval (lo, hi) with rational endpoints."""

    exact: Fraction | None = None
    interval: tuple[Fraction, Fraction] | None = None

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def lower(self) -> Fraction:
        return self.exact if self.exact is not None else self.interval[0]

    @property
    def upper(self) -> Fraction:
        return self.exact if self.exact is not None else self.interval[1]

    def to_text(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        return f"({self.interval[0]}, {self.interval[1]})"


def _element(u: UniPoly):
    return u.to_poly().element


def _from_element(e) -> UniPoly:
    coeffs = [Fraction(0)] * (max((m[0] for m in e.keys()), default=-1) + 1)
    for (degree,), coeff in e.terms():
        coeffs[degree] = to_fraction(coeff)
    return UniPoly(tuple(coeffs))


def _split_rational(u: UniPoly) -> tuple[list[Fraction], UniPoly]:
    """Distinct rational roots and the squarefree product of the remaining irreducible factors."""
    _, factors = _element(u).factor_list()
    roots = []
    rest = poly_ring(UNIVARIATE_NAMES).one
    for factor, _multiplicity in factors:
        f = _from_element(factor)
        if f.degree == 1:
            roots.append(-f.coeffs[0] / f.coeffs[1])
        elif f.degree > 1:
            rest = rest * factor
    return sorted(roots), _from_element(rest)


def rational_roots(u: UniPoly) -> list[Fraction]:
    """Distinct rational roots, ascending."""
    if u.is_zero:
        raise DegenerateInputError("rational roots of the zero polynomial")
    if u.degree < 1:
        return []
    return _split_rational(u)[0]


def _sturm_sequence(u: UniPoly) -> list[UniPoly]:
    ring = poly_ring(UNIVARIATE_NAMES)
    return [_from_element(s) for s in ring.dup_sturm(_element(u))]


def _sign_variations(sequence: list[UniPoly], x: Fraction) -> int:
    signs = [s for s in (p.sign_at(x) for p in sequence) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _cauchy_bound(u: UniPoly) -> Fraction:
    lead = abs(u.coeffs[-1])
    return 1 + max((abs(c) / lead for c in u.coeffs[:-1]), default=Fraction(0))


def count_real_roots(u: UniPoly, lo: Fraction | int, hi: Fraction | int) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    if u.is_zero:
        raise DegenerateInputError("root count of the zero polynomial")
    if u.degree < 1:
        return 0
    sequence = _sturm_sequence(u)
    return _sign_variations(sequence, Fraction(lo)) - _sign_variations(sequence, Fraction(hi))


def _isolate_irrational(u: UniPoly) -> list[tuple[Fraction, Fraction]]:
    # u is squarefree without rational roots, so no rational endpoint is ever a root
    sequence = _sturm_sequence(u)
    bound = _cauchy_bound(u)
    pending = [(-bound, bound)]
    intervals = []
    while pending:
        lo, hi = pending.pop()
        count = _sign_variations(sequence, lo) - _sign_variations(sequence, hi)
        if count == 0:
            continue
        if count == 1:
            intervals.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        pending.extend([(mid, hi), (lo, mid)])
    return sorted(intervals)


def _separate(interval, sequence, exact_roots) -> tuple[Fraction, Fraction]:
    lo, hi = interval
    while any(lo < r < hi for r in exact_roots):
        mid = (lo + hi) / 2
        if _sign_variations(sequence, lo) - _sign_variations(sequence, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def isolate_real_roots(u: UniPoly) -> list[RealRoot]:
    """
    All distinct real roots of u in ascending order.

    Rational roots are extracted first (linear factors over Q) and reported exactly; the
    remaining roots get open isolating intervals that contain no other root and no exact one.
    """
    if u.is_zero:
        raise DegenerateInputError("root isolation of the zero polynomial")
    if u.degree < 1:
        return []
    exact, rest = _split_rational(u)
    roots = [RealRoot(exact=r) for r in exact]
    if rest.degree >= 1:
        sequence = _sturm_sequence(rest)
        for interval in _isolate_irrational(rest):
            roots.append(RealRoot(interval=_separate(interval, sequence, exact)))
    return sorted(roots, key=lambda r: (r.lower, r.upper))


def has_real_root(u: UniPoly) -> bool:
    if u.is_zero:
        return True
    if u.degree < 1:
        return False
    bound = _cauchy_bound(u)
    return count_real_roots(u, -bound, bound) > 0


def refine_root(u: UniPoly, root: RealRoot, width: Fraction) -> RealRoot:
    """Bisects an isolating interval until it is narrower than width."""
    if root.is_exact:
        return root
    _, rest = _split_rational(u)
    sequence = _sturm_sequence(rest)
    lo, hi = root.interval
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if _sign_variations(sequence, lo) - _sign_variations(sequence, mid) == 1:
            hi = mid
        else:
            lo = mid
    return RealRoot(interval=(lo, hi))


def sample_between(roots: list[RealRoot]) -> list[Fraction]:
    """One rational point in each open cell cut out of the real line by the roots."""
    if not roots:
        return [Fraction(0)]
    samples = [Fraction(floor(roots[0].lower) - 1)]
    for left, right in zip(roots, roots[1:]):
        samples.append(simplest_between(left.upper, right.lower))
    samples.append(Fraction(ceil(roots[-1].upper) + 1))
    return samples


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational of smallest height strictly inside (lo, hi), by continued-fraction descent."""
    if lo >= hi:
        raise DegenerateInputError(f"empty interval ({lo}, {hi})")
    base = floor(lo)
    if base + 1 < hi:
        if lo < 0 < hi:
            return Fraction(0)
        return Fraction(base + 1) if hi > 0 else Fraction(ceil(hi) - 1)
    if lo == base:
        return base + 1 / Fraction(floor(1 / (hi - base)) + 1)
    return base + 1 / simplest_between(1 / (hi - base), 1 / (lo - base))

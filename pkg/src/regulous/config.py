from dataclasses import dataclass, replace
from fractions import Fraction

# ============================================================================
# EXPRESSION & ARITHMETIC LIMITS
# ============================================================================

EXPONENT_CAP = 2**16
"""
Largest exponent accepted by the parser (`x^N`) and by `Poly.pow`.

Impact:
  - Exponents are expanded exactly, so x^N alone costs nothing but (x+y)^N has N+1 terms
    with binomial coefficients of ~N bits each.
  - The cap is a guard against typos ("x^100000") rather than a tuning knob.

Watch Out For:
  - Exceeding the cap raises ExponentOverflowError, never a silent truncation.
  - Jets of order k multiply the denominator exponent by k+1; a cap far below 2^16 can make
    high-order jets of innocent inputs fail.
"""

COEFFICIENT_BITS_CAP = 1 << 15
"""
Largest coefficient size (numerator or denominator, in bits) that `mul`/`pow` may produce.

Impact on Runtime:
  - Desk-scale fixtures stay below 200 bits; resolution of deep trees rarely exceeds 1000.
  - 2^15 bits is roughly 10^9864: far beyond anything a sensible computation needs.

Watch Out For:
  - Coefficient explosion usually signals a runaway search (huge N_cap, deep budget);
    the BudgetError message names the operation that overflowed.
"""

# ============================================================================
# RESOLUTION & ARC BATTERIES
# ============================================================================

MAX_RESOLUTION_DEPTH = 12
"""
Maximum number of nested point blow-ups above a single indeterminacy point.

Impact:
  - Every catalog fixture resolves at depth 1 or 2.
  - A function like x^a/(x^2+y^(2m)) needs roughly m levels.

Watch Out For:
  - Hitting the cap yields status `budget_exceeded` and an Unknown verdict, not a claim
    that resolution diverges.
"""

ARC_HEIGHT = 3
"""
Height bound for the coefficients a, b of the default arc battery (t, a*t + b*t^2).

Rationals of height <= 3 are the 15 values 0, +-1, +-2, +-3, +-1/2, +-3/2, +-1/3, +-2/3.

Impact on Runtime:
  - Battery size grows quadratically with the number of admissible coefficients
    (2 * 15^2 arcs per base point in the plane).
  - Raising it to 4 roughly doubles the work; lowering it to 1 keeps only 9 slopes.

Watch Out For:
  - Arc refutation is sound but never complete; a bigger battery finds more witnesses
    but an empty result never proves continuity.
"""

SAMPLE_HEIGHT = 4
"""
Height bound for the rational abscissas used to sample rational points on curves
(refutation points for radical membership, base points on pole curves).
"""

# ============================================================================
# SEARCH CAPS
# ============================================================================

DEFAULT_N_CAP = 8
"""
Largest exponent N tried by the Lojasiewicz and radical-membership certificate searches.

Watch Out For:
  - Each candidate N costs a full k-regulous decision of f^N * g; N_cap = 8 with k = 2
    stays well under a second on the fixtures.
"""

DEFAULT_K_CAP = 4
"""Search cap K for `kmax`: levels 0..K are decided one after another."""

# ============================================================================
# MESH EMISSION
# ============================================================================

MESH_RESOLUTION = 50
"""
Number of grid cells per side for mesh emission (vertices per side = cells + 1).

An even cell count over a symmetric region puts a vertex exactly on the axes, which is
where the indeterminacy points of the catalog functions sit.
"""

MESH_REGION = (Fraction(-1), Fraction(1))
"""Default square region [lo, hi]^2 sampled by mesh emission."""


@dataclass(frozen=True)
class Budget:
    """Per-call knobs of the searches, defaulting to the module constants above."""

    depth: int = MAX_RESOLUTION_DEPTH
    n_cap: int = DEFAULT_N_CAP
    k_cap: int = DEFAULT_K_CAP
    arc_height: int = ARC_HEIGHT
    sample_height: int = SAMPLE_HEIGHT

    def with_overrides(self, **overrides) -> "Budget":
        """Returns a copy with the given non-None fields replaced."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


DEFAULT_BUDGET = Budget()

"""Numerical model of a Gorenstein regular simple fibration in (1,2)-surfaces.

A fibration of type (d, d0) is a bidegree-(0, 10) hypersurface
``z^2 = y^5 + ...`` in F(d; d0).  Everything here is a closed-form function
of the two integers; ratio tests on d0/d are done with exact fractions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRange, PGTooSmall
from .grading import (
    Multidegree,
    SectionTerm,
    WeightMatrix,
    XMonomial,
    checked,
    section_terms,
    xmonomials_of_fibre_degree,
)

BRANCH_BIDEGREE = Multidegree(0, 10)


@dataclass(frozen=True)
class FibrationType:
    d: int
    d0: int

    @property
    def e(self) -> int:
        return 3 * self.d - 2 * self.d0

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.d0, self.d)

    @property
    def weights(self) -> WeightMatrix:
        return WeightMatrix(self.d, self.d0)


def validate(d: int, d0: int) -> FibrationType:
    """Check the existence inequalities d/4 <= d0 <= 3d/2 (with d, d0 >= 1)."""
    if d < 1:
        raise OutOfRange(f"d = {d} violates d >= 1")
    if d0 < 1:
        raise OutOfRange(f"d0 = {d0} violates d0 >= 1")
    if d > 4 * d0:
        raise OutOfRange(f"(d, d0) = ({d}, {d0}) violates d <= 4*d0 ({d} > {4 * d0})")
    if 2 * d0 > 3 * d:
        raise OutOfRange(f"(d, d0) = ({d}, {d0}) violates 2*d0 <= 3*d ({2 * d0} > {3 * d})")
    return FibrationType(d, d0)


def d0_range(d: int) -> range:
    """Admissible d0 for a given d: ceil(d/4) .. floor(3d/2)."""
    return range(-(-d // 4), 3 * d // 2 + 1)


# -- invariants -------------------------------------------------------------


@dataclass(frozen=True)
class NumericalInvariants:
    p_g: int
    q: int
    K3: int


def invariants(f: FibrationType) -> NumericalInvariants:
    p_g, K3 = checked(3 * f.d - 2), checked(4 * f.d - 6)
    assert 3 * K3 == 4 * p_g - 10
    return NumericalInvariants(p_g=p_g, q=0, K3=K3)


def coefficient_degree(a0: int, a1: int, f: FibrationType) -> int:
    """Degree of the binary form multiplying ``x0^a0 x1^a1 y^a2`` in the degree-10 equation."""
    deg = checked(-a0 * (f.d - f.d0) - a1 * (f.d0 - 2 * f.d))
    twice = (a0 + a1) * f.d + (a1 - a0) * f.e
    assert twice % 2 == 0 and twice // 2 == deg, (a0, a1, f)
    return deg


# -- canonical image and model status -----------------------------------------


@dataclass(frozen=True)
class CanonicalImage:
    """``kind`` is one of the three KIND_* names; ``parameter`` is a degree or e."""

    kind: str
    parameter: int

    RATIONAL_NORMAL_CURVE = "rational_normal_curve"
    CONE = "cone_over_rational_normal_curve"
    HIRZEBRUCH = "hirzebruch_surface"

    def __str__(self) -> str:
        if self.kind == self.HIRZEBRUCH:
            return f"F_{self.parameter}"
        if self.kind == self.CONE:
            return f"cone over RNC of degree {self.parameter}"
        return f"RNC of degree {self.parameter}"


def canonical_image(f: FibrationType) -> CanonicalImage:
    if f.d0 == 1:
        return CanonicalImage(CanonicalImage.RATIONAL_NORMAL_CURVE, 3 * f.d - 3)
    if f.d0 == 2:
        return CanonicalImage(CanonicalImage.CONE, 3 * f.d - 4)
    return CanonicalImage(CanonicalImage.HIRZEBRUCH, f.e)


class ModelStatus(enum.Enum):
    CANONICAL_MODEL = "canonical_model"
    MINIMAL_NOT_CANONICAL = "minimal_not_canonical"
    NOT_ON_NOETHER_LINE_OR_NOT_GENERAL_TYPE = "not_on_noether_line_or_not_general_type"

    @property
    def is_canonical(self) -> bool:
        """Whether X is itself its canonical model."""
        return self is ModelStatus.CANONICAL_MODEL


def model_status(f: FibrationType) -> ModelStatus:
    m = min(f.d, f.d0)
    if m >= 3:
        return ModelStatus.CANONICAL_MODEL
    if m == 2:
        return ModelStatus.MINIMAL_NOT_CANONICAL
    return ModelStatus.NOT_ON_NOETHER_LINE_OR_NOT_GENERAL_TYPE


# -- singularities ------------------------------------------------------------


@dataclass(frozen=True)
class RatioInterval:
    lower: Fraction
    upper: Fraction
    lower_closed: bool = True
    upper_closed: bool = False

    def __contains__(self, x: Fraction) -> bool:
        above = x >= self.lower if self.lower_closed else x > self.lower
        below = x <= self.upper if self.upper_closed else x < self.upper
        return above and below

    def __str__(self) -> str:
        left = "[" if self.lower_closed else "("
        right = "]" if self.upper_closed else ")"
        return f"{left}{self.lower}, {self.upper}{right}"


F = Fraction
SMOOTH_INTERVAL = RatioInterval(F(1), F(3, 2), True, True)
SMOOTH_POINT = RatioInterval(F(7, 8), F(7, 8), True, True)
TERMINAL_INTERVAL = RatioInterval(F(7, 8), F(1), False, False)
CANONICAL_INTERVALS = (
    ("cA1", RatioInterval(F(5, 6), F(7, 8))),
    ("cA3", RatioInterval(F(3, 4), F(5, 6))),
    ("cA4", RatioInterval(F(2, 3), F(3, 4))),
    ("cD6", RatioInterval(F(1, 2), F(2, 3))),
    ("cE8", RatioInterval(F(1, 4), F(1, 2))),
)
CANONICAL_KINDS = tuple(kind for kind, _ in CANONICAL_INTERVALS)


@dataclass(frozen=True)
class SingularityClass:
    """``kind`` is "smooth", "terminal" or one of CANONICAL_KINDS."""

    kind: str
    interval: RatioInterval
    count: int | None = None

    def __str__(self) -> str:
        return f"terminal({self.count})" if self.kind == "terminal" else self.kind


def classify_singularities(f: FibrationType) -> SingularityClass:
    """Singularities of the general member, determined by the exact ratio d0/d."""
    r = f.ratio
    # 7/8 is smooth even though it lies below 1; test it before the terminal window
    for interval in (SMOOTH_INTERVAL, SMOOTH_POINT):
        if r in interval:
            return SingularityClass("smooth", interval)
    if r in TERMINAL_INTERVAL:
        count = 8 * f.d0 - 7 * f.d
        assert 0 < count < f.d
        return SingularityClass("terminal", TERMINAL_INTERVAL, count)
    for kind, interval in CANONICAL_INTERVALS:
        if r in interval:
            return SingularityClass(kind, interval)
    raise OutOfRange(f"d0/d = {r} lies outside [1/4, 3/2]")


# -- branch divisor -------------------------------------------------------------

# Monomials whose coefficient form vanishes identically once d0/d drops below
# the bound; the rows accumulate as the ratio decreases.
TABLE_OF_VANISHING = (
    (F(1), "terminal", (XMonomial(10, 0, 0), XMonomial(8, 0, 1), XMonomial(6, 0, 2),
                        XMonomial(4, 0, 3), XMonomial(2, 0, 4))),
    (F(7, 8), "cA1", (XMonomial(9, 1, 0),)),
    (F(5, 6), "cA3", (XMonomial(7, 1, 1),)),
    (F(3, 4), "cA4", (XMonomial(5, 1, 2),)),
    (F(2, 3), "cD6", (XMonomial(8, 2, 0),)),
    (F(1, 2), "cE8", (XMonomial(6, 2, 1), XMonomial(3, 1, 3))),
)


def branch_monomials() -> list[XMonomial]:
    """The 36 z-free x-monomials of fibre degree 10."""
    return xmonomials_of_fibre_degree(BRANCH_BIDEGREE.w2, max_z_exponent=0)


def vanishing_monomials(f: FibrationType) -> list[XMonomial]:
    """Branch monomials whose coefficient form has negative degree."""
    return [m for m in branch_monomials() if coefficient_degree(m.a0, m.a1, f) < 0]


def tabulated_vanishing_monomials(ratio: Fraction) -> set[XMonomial]:
    """Union of the vanishing-monomial table rows selected by ``ratio``."""
    out: set[XMonomial] = set()
    for bound, _, monomials in TABLE_OF_VANISHING:
        if ratio < bound:
            out.update(monomials)
    return out


def branch_basis(f: FibrationType) -> list[SectionTerm]:
    return section_terms(f.weights, BRANCH_BIDEGREE, max_z_exponent=0)


# -- geography ------------------------------------------------------------------


@dataclass(frozen=True)
class NoetherClass:
    """``kind`` is "on_line", "above_line" or "forbidden"; ``gap`` = K3 - line."""

    kind: str
    gap: Fraction | None = None


def noether_line(p_g: int) -> Fraction:
    return Fraction(4 * p_g - 10, 3)


# minimal excess over the line for p_g mod 3 = 0, 1, 2
_MIN_EXCESS = {0: Fraction(1, 3), 1: Fraction(1, 2), 2: Fraction(1, 6)}


def noether_classification(p_g: int, K3: Fraction | int | str) -> NoetherClass:
    """Where (p_g, K3) sits relative to the Noether line for p_g >= 7."""
    if p_g < 7:
        raise PGTooSmall(f"p_g = {p_g} < 7")
    K3 = Fraction(K3)
    line = noether_line(p_g)
    residue = p_g % 3
    if residue == 1 and K3 == line:
        return NoetherClass("on_line", Fraction(0))
    if K3 >= line + _MIN_EXCESS[residue]:
        return NoetherClass("above_line", K3 - line)
    return NoetherClass("forbidden")

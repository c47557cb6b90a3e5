"""Dimensions of the strata M_d(d0) and the global shape of the moduli space.

The stratum dimension is

    delta(d, d0) = h0(branch classes) - dim Aut(D_z) - 1

where both terms are piecewise affine in (d, d0) with cases selected by the
exact ratio d0/d.  The piecewise tables below are the closed forms; the
``oracle`` module recomputes the same numbers by monomial enumeration.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DTooSmall, EmptyModuli, PGTooSmall
from .fibration import (
    CanonicalImage,
    FibrationType,
    ModelStatus,
    RatioInterval,
    SingularityClass,
    canonical_image,
    classify_singularities,
    d0_range,
    model_status,
    validate,
)
from .grading import checked

F = Fraction
MIN_D = 5
MIN_PG = 11


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# (interval of d0/d, coefficient of d, coefficient of d0, constant)
H0_BRANCH_CASES = (
    (RatioInterval(F(1), F(3, 2), True, True), 125, 0, 36),
    (RatioInterval(F(7, 8), F(1)), 155, -30, 31),
    (RatioInterval(F(5, 6), F(7, 8)), 162, -38, 30),
    (RatioInterval(F(3, 4), F(5, 6)), 167, -44, 29),
    (RatioInterval(F(2, 3), F(3, 4)), 170, -48, 28),
    (RatioInterval(F(1, 2), F(2, 3)), 174, -54, 27),
    (RatioInterval(F(1, 4), F(1, 2)), 177, -60, 25),
)

# Ordered left to right; the last piece is the single point d0 = 3d/2.
DELTA_CASES = (
    (RatioInterval(F(1, 4), F(1, 2)), 169, -56, 16),
    (RatioInterval(F(1, 2), F(2, 3)), 166, -50, 18),
    (RatioInterval(F(2, 3), F(3, 4)), 162, -44, 19),
    (RatioInterval(F(3, 4), F(5, 6)), 159, -40, 20),
    (RatioInterval(F(5, 6), F(7, 8)), 154, -34, 21),
    (RatioInterval(F(7, 8), F(1)), 147, -26, 22),
    (RatioInterval(F(1), F(3, 2)), 119, 2, 26),
    (RatioInterval(F(3, 2), F(3, 2), True, True), 122, 0, 25),
)


def _select(cases, ratio: Fraction):
    for interval, *coeffs in cases:
        if ratio in interval:
            return coeffs
    raise ValueError(f"d0/d = {ratio} outside [1/4, 3/2]")


def h0_branch_closed(f: FibrationType) -> int:
    a, b, c = _select(H0_BRANCH_CASES, f.ratio)
    return checked(a * f.d + b * f.d0 + c)


def dim_aut_closed(f: FibrationType) -> int:
    d, d0 = f.d, f.d0
    if 2 * d0 == 3 * d:
        return checked(3 * d + 10)
    if d <= d0:
        return checked(6 * d - 2 * d0 + 9)
    return checked(8 * d - 4 * d0 + 8)


def delta_from_cases(f: FibrationType) -> int:
    a, b, c = _select(DELTA_CASES, f.ratio)
    return checked(a * f.d + b * f.d0 + c)


def delta(f: FibrationType) -> int:
    """Dimension of the modular family M_d(d0)."""
    value = h0_branch_closed(f) - dim_aut_closed(f) - 1
    assert value == delta_from_cases(f), (f, value, delta_from_cases(f))
    return value


# -- the real-variable profile -------------------------------------------------


@dataclass(frozen=True)
class Segment:
    """Affine piece ``slope * d0 + d_coeff * d + constant`` on ``interval`` (absolute d0)."""

    interval: RatioInterval
    slope: int
    d_coeff: int
    constant: int

    def evaluate(self, d: int, d0: Fraction | int) -> Fraction:
        return self.slope * F(d0) + self.d_coeff * d + self.constant


@dataclass(frozen=True)
class DeltaProfile:
    d: int
    segments: tuple[Segment, ...]
    # (breakpoint d0 = lambda*d, value there minus the left limit)
    discontinuities: tuple[tuple[Fraction, Fraction], ...]

    def segment_at(self, d0: Fraction | int) -> Segment:
        for seg in self.segments:
            if F(d0) in seg.interval:
                return seg
        raise ValueError(f"d0 = {d0} outside [{F(self.d, 4)}, {F(3 * self.d, 2)}]")

    def __call__(self, d0: Fraction | int) -> Fraction:
        return self.segment_at(d0).evaluate(self.d, d0)


def delta_profile(d: int) -> DeltaProfile:
    if d < MIN_D:
        raise DTooSmall(f"d = {d} < {MIN_D}")
    segments = tuple(
        Segment(
            RatioInterval(iv.lower * d, iv.upper * d, iv.lower_closed, iv.upper_closed),
            slope, d_coeff, const,
        )
        for iv, d_coeff, slope, const in DELTA_CASES
    )
    jumps = []
    for left, right in zip(segments, segments[1:]):
        x = right.interval.lower
        jumps.append((x, right.evaluate(d, x) - left.evaluate(d, x)))
    return DeltaProfile(d, segments, tuple(jumps))


# -- strata ---------------------------------------------------------------------


class StratumStatus(enum.Enum):
    TOP_STRATUM = "top_stratum"
    IN_CLOSURE_OF_TOP = "in_closure_of_top"
    DENSE_IN_COMPONENT = "dense_in_component"
    UNDETERMINED = "undetermined"


def stratum_status(f: FibrationType) -> StratumStatus:
    d, d0 = f.d, f.d0
    if d < MIN_D:
        raise DTooSmall(f"d = {d} < {MIN_D}")
    top = 3 * d // 2
    if d0 == top:
        return StratumStatus.TOP_STRATUM
    if d <= d0 < top:
        return StratumStatus.IN_CLOSURE_OF_TOP
    if 26 * d0 <= 25 * d - 3:
        return StratumStatus.DENSE_IN_COMPONENT
    return StratumStatus.UNDETERMINED


@dataclass(frozen=True)
class StratumRecord:
    d: int
    d0: int
    h0_branch: int
    dim_aut: int
    delta: int
    singularity: SingularityClass
    image: CanonicalImage
    status: StratumStatus | None  # None when d < 5: the stratification is not proved there
    model: ModelStatus


def stratum_record(f: FibrationType) -> StratumRecord:
    h0, aut, dim = h0_branch_closed(f), dim_aut_closed(f), delta(f)
    assert dim == h0 - aut - 1
    return StratumRecord(
        d=f.d,
        d0=f.d0,
        h0_branch=h0,
        dim_aut=aut,
        delta=dim,
        singularity=classify_singularities(f),
        image=canonical_image(f),
        status=stratum_status(f) if f.d >= MIN_D else None,
        model=model_status(f),
    )


# -- the moduli space M_{K^3, p_g} -----------------------------------------------


def _require_nonempty(p_g: int) -> int:
    if p_g < MIN_PG:
        raise PGTooSmall(f"p_g = {p_g} < {MIN_PG}")
    if p_g % 3 != 1:
        raise EmptyModuli(f"p_g = {p_g} is not 1 mod 3; the moduli space is empty")
    return (p_g + 2) // 3


def component_bounds(p_g: int) -> tuple[int, int]:
    """(upper, lower) bounds on the number of irreducible components."""
    _require_nonempty(p_g)
    upper = (p_g + 6) // 4
    return upper, upper - (p_g + 8) // 78


def moduli_dimension(p_g: int) -> int:
    d = _require_nonempty(p_g)
    value = F(169, 3) * p_g - 56 * _ceil_div(p_g + 2, 12) + F(386, 3)
    assert value.denominator == 1, value
    dim = checked(int(value))
    assert dim == delta(validate(d, _ceil_div(d, 4)))
    return dim


@dataclass(frozen=True)
class ModuliSummary:
    p_g: int
    nonempty: bool
    d: int | None = None
    strata: tuple[StratumRecord, ...] = field(default=())
    components_upper: int = 0
    components_lower: int = 0
    dimension: int | None = None
    argmax_d0: int | None = None

    @property
    def stratum_count(self) -> int:
        return len(self.strata)

    @property
    def undetermined_count(self) -> int:
        return sum(r.status is StratumStatus.UNDETERMINED for r in self.strata)


def moduli_summary(p_g: int) -> ModuliSummary:
    if p_g < MIN_PG:
        raise PGTooSmall(f"p_g = {p_g} < {MIN_PG}")
    if p_g % 3 != 1:
        return ModuliSummary(p_g=p_g, nonempty=False)
    d = (p_g + 2) // 3
    strata = tuple(stratum_record(validate(d, d0)) for d0 in d0_range(d))
    best = max(strata, key=lambda r: r.delta)
    upper, lower = component_bounds(p_g)
    dimension = moduli_dimension(p_g)
    assert best.delta == dimension and best.d0 == _ceil_div(d, 4)
    return ModuliSummary(
        p_g=p_g,
        nonempty=True,
        d=d,
        strata=strata,
        components_upper=upper,
        components_lower=lower,
        dimension=dimension,
        argmax_d0=best.d0,
    )

"""Bigraded monomial bookkeeping on the toric 4-fold F(d; d0).

The Cox ring is k[t0, t1, x0, x1, y, z] with the two gradings::

         t0  t1  x0      x1       y   z
    w1:   1   1  d - d0  d0 - 2d  0   0
    w2:   0   0  1       1        2   5

A monomial of bidegree (w1, w2) factors uniquely as a binary form in
(t0, t1) times an x-monomial ``x0^a0 x1^a1 y^a2 z^a3`` with fibre degree
``a0 + a1 + 2 a2 + 5 a3 == w2``.  The binary form then has degree
``w1 - (first-row weight of the x-monomial)``, so the section space splits
into one symmetric power S^n(t0, t1) per x-monomial.  Counting sections is
summing ``max(0, n + 1)`` over those pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import IntegerOverflow

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

VARIABLES = ("t0", "t1", "x0", "x1", "y", "z")
FIBRE_WEIGHTS = (1, 1, 2, 5)


def checked(value: int) -> int:
    """Return ``value`` unchanged, or raise if it does not fit in int64."""
    if not INT64_MIN <= value <= INT64_MAX:
        raise IntegerOverflow(f"{value} does not fit in a signed 64-bit integer")
    return value


class Multidegree(NamedTuple):
    w1: int
    w2: int


class XMonomial(NamedTuple):
    """Exponents of ``x0^a0 x1^a1 y^a2 z^a3``."""

    a0: int
    a1: int
    a2: int
    a3: int = 0

    @property
    def fibre_degree(self) -> int:
        return self.a0 + self.a1 + 2 * self.a2 + 5 * self.a3

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.a3, self.a2, self.a1, self.a0)

    def __str__(self) -> str:
        parts = []
        for name, exp in zip(("x0", "x1", "y", "z"), self):
            if exp == 1:
                parts.append(name)
            elif exp > 1:
                parts.append(f"{name}^{exp}")
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class WeightMatrix:
    d: int
    d0: int

    @property
    def columns(self) -> tuple[tuple[str, tuple[int, int]], ...]:
        d, d0 = self.d, self.d0
        first = (1, 1, d - d0, d0 - 2 * d, 0, 0)
        second = (0, 0, 1, 1, 2, 5)
        return tuple(zip(VARIABLES, zip(first, second)))

    def weight(self, variable: str) -> Multidegree:
        return Multidegree(*dict(self.columns)[variable])

    def first_row_weight(self, m: XMonomial) -> int:
        # y and z have first-row weight 0
        return checked(m.a0 * (self.d - self.d0) + m.a1 * (self.d0 - 2 * self.d))

    def bidegree(self, m: XMonomial) -> Multidegree:
        return Multidegree(self.first_row_weight(m), m.fibre_degree)


@dataclass(frozen=True)
class SectionTerm:
    """One summand ``S^coeff_degree(t0, t1) * monomial`` of a section space."""

    monomial: XMonomial
    coeff_degree: int

    @property
    def contribution(self) -> int:
        return max(0, self.coeff_degree + 1)


def xmonomials_of_fibre_degree(w2: int, max_z_exponent: int | None = None) -> list[XMonomial]:
    """All x-monomials of fibre degree ``w2``, ordered lexicographically by (a3, a2, a1, a0).

    ``max_z_exponent`` caps the power of z; pass 0 to stay on the divisor z = 0.
    A negative ``w2`` gives an empty list.
    """
    if w2 < 0:
        return []
    top_z = w2 // 5 if max_z_exponent is None else min(w2 // 5, max_z_exponent)
    out = []
    for a3 in range(top_z + 1):
        rest3 = w2 - 5 * a3
        for a2 in range(rest3 // 2 + 1):
            rest2 = rest3 - 2 * a2
            for a1 in range(rest2 + 1):
                out.append(XMonomial(rest2 - a1, a1, a2, a3))
    return out


def section_terms(weights: WeightMatrix, target: Multidegree | tuple[int, int],
                  max_z_exponent: int | None = None) -> list[SectionTerm]:
    """Decompose the bidegree-``target`` piece of the Cox ring into binary-form summands."""
    target = Multidegree(*target)
    return [
        SectionTerm(m, checked(target.w1 - weights.first_row_weight(m)))
        for m in xmonomials_of_fibre_degree(target.w2, max_z_exponent)
    ]


def count_sections(weights: WeightMatrix, target: Multidegree | tuple[int, int],
                   max_z_exponent: int | None = None) -> int:
    """Number of Cox-ring monomials of bidegree ``target``."""
    return checked(sum(t.contribution for t in section_terms(weights, target, max_z_exponent)))

"""Brute-force recomputation of every closed form, and range sweeps.

The brute-force counts go through ``grading`` only: they enumerate Cox-ring
monomials and never consult the piecewise case tables in ``moduli``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import RangeInvalid
from .fibration import (
    BRANCH_BIDEGREE,
    FibrationType,
    d0_range,
    tabulated_vanishing_monomials,
    validate,
    vanishing_monomials,
)
from .grading import count_sections
from .moduli import (
    MIN_D,
    StratumStatus,
    delta_from_cases,
    delta_profile,
    dim_aut_closed,
    h0_branch_closed,
    stratum_status,
)

# d0 -> (h0 of the branch classes, dim Aut D_z, delta) for d = 24
TABLE_D24 = {
    36: (3036, 82, 2953),
    35: (3036, 83, 2952),
    34: (3036, 85, 2950),
    33: (3036, 87, 2948),
    25: (3036, 103, 2932),
    24: (3036, 105, 2930),
    23: (3061, 108, 2952),
    22: (3091, 112, 2978),
    21: (3121, 116, 3004),
    8: (3793, 168, 3624),
    7: (3853, 172, 3680),
    6: (3913, 176, 3736),
}

BREAKPOINT_RATIOS = tuple(Fraction(*p) for p in ((1, 2), (2, 3), (3, 4), (5, 6), (7, 8), (1, 1), (3, 2)))
EXPECTED_GAPS = (2, 1, 1, 1, 1, 4, -1)

AUT_VARIABLES = ("t0", "t1", "x0", "x1", "y")


def h0_branch_bruteforce(f: FibrationType) -> int:
    return count_sections(f.weights, BRANCH_BIDEGREE, max_z_exponent=0)


def aut_summands(f: FibrationType) -> dict[str, int]:
    """h0 on D_z of each torus-invariant divisor, evaluated at its variable's bidegree."""
    w = f.weights
    return {v: count_sections(w, w.weight(v), max_z_exponent=0) for v in AUT_VARIABLES}


def dim_aut_bruteforce(f: FibrationType) -> int:
    return sum(aut_summands(f).values()) - 2


def delta_bruteforce(f: FibrationType) -> int:
    return h0_branch_bruteforce(f) - dim_aut_bruteforce(f) - 1


@dataclass(frozen=True, order=True)
class Failure:
    d: int
    d0: int  # -1 for checks that concern the whole profile of d
    check: str
    expected: str
    actual: str


@dataclass
class VerificationReport:
    d_min: int
    d_max: int
    checks_run: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class _Checker:
    def __init__(self, d: int) -> None:
        self.d = d
        self.run = 0
        self.failures: list[Failure] = []

    def __call__(self, check: str, expected, actual, d0: int = -1) -> None:
        self.run += 1
        if expected != actual:
            self.failures.append(Failure(self.d, d0, check, str(expected), str(actual)))


def _verify_d(d: int) -> tuple[int, list[Failure]]:
    check = _Checker(d)
    deltas = {}
    undetermined = 0
    for d0 in d0_range(d):
        f = validate(d, d0)
        h0, aut = h0_branch_closed(f), dim_aut_closed(f)
        check("h0_branch", h0, h0_branch_bruteforce(f), d0)
        check("dim_aut", aut, dim_aut_bruteforce(f), d0)
        cases = delta_from_cases(f)
        check("delta_cases", h0 - aut - 1, cases, d0)
        check("delta_bruteforce", cases, delta_bruteforce(f), d0)
        vanishing = set(vanishing_monomials(f))
        check("vanishing_table", sorted(tabulated_vanishing_monomials(f.ratio)), sorted(vanishing), d0)
        check("vanishing_empty", d0 >= d, not vanishing, d0)
        if d == 24 and d0 in TABLE_D24:
            check("table_d24", TABLE_D24[d0], (h0, aut, cases), d0)
        deltas[d0] = cases
        undetermined += stratum_status(f) is StratumStatus.UNDETERMINED

    lo, hi = min(deltas), max(deltas)
    check("decreasing_below_d", True, all(deltas[k] > deltas[k + 1] for k in range(lo, d)))
    check("increasing_above_d", True, all(deltas[k] < deltas[k + 1] for k in range(d, hi)))
    check("argmax", [lo], [k for k, v in deltas.items() if v == max(deltas.values())])

    profile = delta_profile(d)
    check("breakpoints", [r * d for r in BREAKPOINT_RATIOS], [x for x, _ in profile.discontinuities])
    check("gaps", list(EXPECTED_GAPS), [g for _, g in profile.discontinuities])
    check("profile_matches_integers", deltas, {k: profile(k) for k in deltas})
    coincidence = (profile(Fraction(3 * d, 2)), profile(Fraction(25 * d - 3, 26)))
    check("coincidence", (122 * d + 25, 122 * d + 25), coincidence)
    check("undetermined_count", (d + 2) // 26, undetermined)
    return check.run, check.failures


def verify_range(d_min: int, d_max: int, workers: int = 1) -> VerificationReport:
    """Cross-check closed forms against enumeration for every d in [d_min, d_max]."""
    if not MIN_D <= d_min <= d_max:
        raise RangeInvalid(f"need {MIN_D} <= d_min <= d_max, got [{d_min}, {d_max}]")
    ds = range(d_min, d_max + 1)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_verify_d, ds))
    else:
        results = [_verify_d(d) for d in ds]
    report = VerificationReport(d_min, d_max)
    for run, failures in results:
        report.checks_run += run
        report.failures.extend(failures)
    report.failures.sort()
    return report

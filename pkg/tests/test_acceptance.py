"""Exit criteria for the build.

Each test prints one ``PASS``/``FAIL`` line.  Run just this module with::

    pytest tests/test_acceptance.py -v -s
"""

from __future__ import annotations

import csv
import io
import math
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from noetherline.fibration import FibrationType, XMonomial, d0_range, vanishing_monomials
from noetherline.moduli import (
    StratumStatus,
    component_bounds,
    delta,
    delta_profile,
    moduli_dimension,
    moduli_summary,
    stratum_status,
)

TABLE_D24_ROWS = {
    (36, 3036, 82, 2953), (35, 3036, 83, 2952), (34, 3036, 85, 2950), (33, 3036, 87, 2948),
    (25, 3036, 103, 2932), (24, 3036, 105, 2930), (23, 3061, 108, 2952), (22, 3091, 112, 2978),
    (21, 3121, 116, 3004), (8, 3793, 168, 3624), (7, 3853, 172, 3680), (6, 3913, 176, 3736),
}

# vanishing-monomial table, transcribed independently of the package copy:
# (ratio bound, exponent triples (a0, a1, a2))
VANISHING_ROWS = [
    (Fraction(1), [(10, 0, 0), (8, 0, 1), (6, 0, 2), (4, 0, 3), (2, 0, 4)]),
    (Fraction(7, 8), [(9, 1, 0)]),
    (Fraction(5, 6), [(7, 1, 1)]),
    (Fraction(3, 4), [(5, 1, 2)]),
    (Fraction(2, 3), [(8, 2, 0)]),
    (Fraction(1, 2), [(6, 2, 1), (3, 1, 3)]),
]

PG_NONEMPTY = [p for p in range(13, 602) if p % 3 == 1]


@pytest.fixture
def report(capsys, request):
    """Print one PASS/FAIL line for the criterion under test."""
    label = request.node.get_closest_marker("criterion").args[0]
    yield
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    with capsys.disabled():
        print(f"\n{'FAIL' if failed else 'PASS'}  criterion {label}")


def cli(*argv: str) -> tuple[subprocess.CompletedProcess, float]:
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "noetherline", *argv], capture_output=True, text=True)
    return proc, time.perf_counter() - start


@pytest.mark.criterion("1: Table 2 reproduced by `profile --d 24 --format csv` in < 1 s")
def test_criterion_1_table_d24(report):
    proc, elapsed = cli("profile", "--d", "24", "--format", "csv")
    assert proc.returncode == 0
    rows = {
        (int(r["d0"]), int(r["h0_branch"]), int(r["dim_aut"]), int(r["delta"]))
        for r in csv.DictReader(io.StringIO(proc.stdout))
    }
    assert TABLE_D24_ROWS <= rows
    by_d0 = {r[0]: r for r in rows}
    assert {by_d0[t[0]] for t in TABLE_D24_ROWS} == TABLE_D24_ROWS
    assert elapsed < 1.0, elapsed


@pytest.mark.criterion("2: `verify --from 5 --to 60` exits 0 in < 30 s")
def test_criterion_2_oracle_sweep(report):
    proc, elapsed = cli("verify", "--from", "5", "--to", "60")
    assert proc.returncode == 0, proc.stdout
    assert " 0 failures" in proc.stdout
    assert elapsed < 30.0, elapsed


@pytest.mark.criterion("3: dimension formula equals delta(d, ceil(d/4)) for p_g = 1 mod 3 in [13, 601]")
def test_criterion_3_dimension_formula(report):
    for p_g in PG_NONEMPTY:
        d = (p_g + 2) // 3
        exact = Fraction(169, 3) * p_g - 56 * math.ceil(Fraction(p_g + 2, 12)) + Fraction(386, 3)
        assert exact.denominator == 1
        assert moduli_dimension(p_g) == exact == delta(FibrationType(d, math.ceil(Fraction(d, 4))))
    assert moduli_dimension(70) == 3736
    assert moduli_dimension(13) == 749
    assert moduli_dimension(16) == 918


@pytest.mark.criterion("4: component bounds and Undetermined count")
def test_criterion_4_component_bounds(report):
    assert component_bounds(70) == (19, 18)
    assert component_bounds(13) == (4, 4)
    for p_g in PG_NONEMPTY:
        upper, lower = component_bounds(p_g)
        d = (p_g + 2) // 3
        undetermined = sum(
            stratum_status(FibrationType(d, d0)) is StratumStatus.UNDETERMINED for d0 in d0_range(d)
        )
        assert upper - lower == (p_g + 8) // 78 == undetermined


@pytest.mark.criterion("5: monotonicity, gaps and coincidence for d in [5, 200]")
def test_criterion_5_profile_properties(report):
    lam = [Fraction(1, 2), Fraction(2, 3), Fraction(3, 4), Fraction(5, 6), Fraction(7, 8), Fraction(1), Fraction(3, 2)]
    for d in range(5, 201):
        values = {d0: delta(FibrationType(d, d0)) for d0 in d0_range(d)}
        lo, hi = min(values), max(values)
        assert all(values[k] > values[k + 1] for k in range(lo, d))
        assert all(values[k] < values[k + 1] for k in range(d, hi))
        profile = delta_profile(d)
        assert [x for x, _ in profile.discontinuities] == [r * d for r in lam]
        assert [g for _, g in profile.discontinuities] == [2, 1, 1, 1, 1, 4, -1]
        assert profile(Fraction(3 * d, 2)) == profile(Fraction(25 * d - 3, 26)) == 122 * d + 25


@pytest.mark.criterion("6: vanishing monomials match the table on 1000 seeded random types")
def test_criterion_6_vanishing_table(report):
    rng = random.Random(20240611)
    for _ in range(1000):
        d = rng.randint(1, 10_000)
        d0 = rng.randint(-(-d // 4), 3 * d // 2)
        ratio = Fraction(d0, d)
        expected = {XMonomial(*m) for bound, ms in VANISHING_ROWS if ratio < bound for m in ms}
        got = vanishing_monomials(FibrationType(d, d0))
        assert set(got) == expected and len(got) == len(expected), (d, d0)
        assert (not got) == (d0 >= d)


@pytest.mark.criterion("7: moduli nonempty iff p_g = 1 mod 3, p_g in [11, 300]")
def test_criterion_7_emptiness(report):
    for p_g in range(11, 301):
        assert moduli_summary(p_g).nonempty == (p_g % 3 == 1)

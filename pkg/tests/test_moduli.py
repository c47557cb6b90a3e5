from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from noetherline.errors import DTooSmall, EmptyModuli, PGTooSmall
from noetherline.fibration import FibrationType, ModelStatus, d0_range, validate
from noetherline.moduli import (
    StratumStatus,
    component_bounds,
    delta,
    delta_from_cases,
    delta_profile,
    dim_aut_closed,
    h0_branch_closed,
    moduli_dimension,
    moduli_summary,
    stratum_record,
    stratum_status,
)
from noetherline.oracle import TABLE_D24


@pytest.mark.parametrize("d0", sorted(TABLE_D24))
def test_table_d24(d0):
    f = FibrationType(24, d0)
    assert (h0_branch_closed(f), dim_aut_closed(f), delta(f)) == TABLE_D24[d0]


def test_h0_examples():
    assert h0_branch_closed(FibrationType(24, 22)) == 3091
    assert h0_branch_closed(FibrationType(24, 7)) == 3853
    assert h0_branch_closed(FibrationType(5, 7)) == 125 * 5 + 36 == 661


def test_dim_aut_examples():
    assert dim_aut_closed(FibrationType(24, 36)) == 82
    assert dim_aut_closed(FibrationType(24, 35)) == 83
    assert dim_aut_closed(FibrationType(24, 8)) == 168


def test_delta_small_d():
    # d = 5 checked against the oracle sweep; 3/5 lies in [1/2, 2/3)
    assert [delta(FibrationType(5, d0)) for d0 in d0_range(5)] == [749, 698, 655, 631, 633, 635]
    assert delta(FibrationType(5, 2)) == 169 * 5 - 56 * 2 + 16
    assert delta(FibrationType(5, 3)) == 166 * 5 - 50 * 3 + 18


@given(st.integers(1, 2000), st.data())
def test_delta_paths_agree(d, data):
    f = FibrationType(d, data.draw(st.sampled_from(d0_range(d))))
    assert h0_branch_closed(f) - dim_aut_closed(f) - 1 == delta_from_cases(f) == delta(f)


def test_profile_gaps_d24():
    profile = delta_profile(24)
    gaps = dict(profile.discontinuities)
    assert gaps[Fraction(24)] == 4
    assert gaps[Fraction(36)] == -1
    # the jump at d0 = d seen from the table: 2930 vs 2952 - 26
    assert profile(24) - (profile(23) - 26) == 4


@pytest.mark.parametrize("d", range(5, 61))
def test_profile_structure(d):
    profile = delta_profile(d)
    lam = [Fraction(1, 2), Fraction(2, 3), Fraction(3, 4), Fraction(5, 6), Fraction(7, 8), 1, Fraction(3, 2)]
    assert [x for x, _ in profile.discontinuities] == [r * d for r in lam]
    assert [g for _, g in profile.discontinuities] == [2, 1, 1, 1, 1, 4, -1]
    for d0 in d0_range(d):
        assert profile(d0) == delta(FibrationType(d, d0))
    assert profile(Fraction(3 * d, 2)) == profile(Fraction(25 * d - 3, 26)) == 122 * d + 25


def test_profile_rejects_small_d():
    with pytest.raises(DTooSmall):
        delta_profile(4)
    with pytest.raises(ValueError):
        delta_profile(10)(Fraction(1, 3))


def test_stratum_status_examples():
    assert stratum_status(FibrationType(24, 36)) is StratumStatus.TOP_STRATUM
    assert stratum_status(FibrationType(24, 30)) is StratumStatus.IN_CLOSURE_OF_TOP
    assert stratum_status(FibrationType(24, 24)) is StratumStatus.IN_CLOSURE_OF_TOP
    assert stratum_status(FibrationType(24, 23)) is StratumStatus.UNDETERMINED
    assert stratum_status(FibrationType(24, 22)) is StratumStatus.DENSE_IN_COMPONENT
    assert stratum_status(FibrationType(5, 7)) is StratumStatus.TOP_STRATUM
    with pytest.raises(DTooSmall):
        stratum_status(FibrationType(4, 4))


@pytest.mark.parametrize("d", range(5, 501))
def test_undetermined_cardinality(d):
    statuses = [stratum_status(FibrationType(d, d0)) for d0 in d0_range(d)]
    assert statuses[-1] is StratumStatus.TOP_STRATUM
    assert statuses.count(StratumStatus.TOP_STRATUM) == 1
    assert statuses.count(StratumStatus.UNDETERMINED) == (d + 2) // 26
    assert (StratumStatus.UNDETERMINED in statuses) == (d >= 24)


def test_component_bounds():
    assert component_bounds(70) == (19, 18)
    assert component_bounds(13) == (4, 4)
    assert component_bounds(67) == (18, 18)
    with pytest.raises(EmptyModuli):
        component_bounds(12)
    with pytest.raises(PGTooSmall):
        component_bounds(10)


@given(st.integers(5, 10**5))
def test_upper_bound_counts_integers_up_to_d(d):
    p_g = 3 * d - 2
    upper, _ = component_bounds(p_g)
    assert upper == sum(1 for d0 in d0_range(d) if d0 <= d)


def test_moduli_dimension():
    assert moduli_dimension(70) == 3736
    assert moduli_dimension(13) == 749
    assert moduli_dimension(16) == 918 == delta(FibrationType(6, 2))
    with pytest.raises(EmptyModuli):
        moduli_dimension(11)
    with pytest.raises(PGTooSmall):
        moduli_dimension(10)


def test_stratum_record_small_d_has_no_status():
    record = stratum_record(validate(4, 2))
    assert record.status is None and record.model is ModelStatus.MINIMAL_NOT_CANONICAL


def test_summary_70():
    s = moduli_summary(70)
    assert s.nonempty and s.d == 24
    assert [r.d0 for r in s.strata] == list(range(6, 37))
    assert (s.components_upper, s.components_lower) == (19, 18)
    assert s.dimension == 3736 and s.argmax_d0 == 6
    assert s.undetermined_count == 1


def test_summary_13():
    s = moduli_summary(13)
    assert s.stratum_count == 6 and [r.d0 for r in s.strata] == [2, 3, 4, 5, 6, 7]
    assert (s.components_upper, s.components_lower, s.dimension, s.argmax_d0) == (4, 4, 749, 2)
    assert s.strata[0].model is ModelStatus.MINIMAL_NOT_CANONICAL


def test_summary_empty_and_small():
    s = moduli_summary(12)
    assert not s.nonempty and s.strata == ()
    with pytest.raises(PGTooSmall):
        moduli_summary(10)


@pytest.mark.parametrize("d", range(5, 201))
def test_argmax_unique(d):
    values = {d0: delta(FibrationType(d, d0)) for d0 in d0_range(d)}
    best = max(values.values())
    assert [k for k, v in values.items() if v == best] == [-(-d // 4)]

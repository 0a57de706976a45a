import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hypersample import bounds
from hypersample.bounds import (
    BoundsReport,
    bounds_report,
    c0_condition,
    gmw_log_count,
    irregular_bound_value,
    irregular_simplicity_bound,
    mixing_budget_irregular,
    mixing_budget_regular,
    regular_simplicity_bound,
    regular_simplicity_bound_exact,
    runtime_factor,
    sampler_eps,
    tv_output_bound,
)
from hypersample.core import BipartiteDegreeSequence, HypergraphInstance
from hypersample.errors import DegreeExceedsEdges, DegreeSumMismatch, IndivisibleTotal, InvalidRegion


@pytest.mark.parametrize("n, d, k, value", [(6, 1, 3, 0.95), (3, 2, 3, 0.0), (4, 3, 3, 0.0)])
def test_regular_bound(n, d, k, value):
    assert regular_simplicity_bound(n, d, k) == value


def test_regular_bound_indivisible():
    with pytest.raises(IndivisibleTotal):
        regular_simplicity_bound(4, 1, 3)


def test_irregular_bound_mixed():
    inst = HypergraphInstance((2, 2, 2, 1, 1, 1), 3)
    expected = 1 - Fraction(12, 9) ** 3 * Fraction(3, 20)
    assert irregular_simplicity_bound(inst).value == pytest.approx(0.64444, abs=1e-5)
    assert irregular_simplicity_bound(inst).value == pytest.approx(float(expected), rel=1e-12)
    assert not irregular_simplicity_bound(inst).valid


def test_irregular_reduces_on_six_ones():
    assert irregular_simplicity_bound(HypergraphInstance((1,) * 6, 3)).value == pytest.approx(0.95)


def test_irregular_clamps_to_zero():
    # (60/16)^4 * 6/495 > 1; the degree sequence itself is not realisable
    assert irregular_bound_value(12, 16, 5, 4) == 0.0
    with pytest.raises(DegreeExceedsEdges):
        HypergraphInstance((5,) + (1,) * 11, 4)


@pytest.mark.parametrize(
    "d, c0, holds",
    [((1,) * 6, 0.05, True), ((1,) * 6, 0.04, False), ((2, 2, 2), 0.99, False)],
)
def test_c0_condition(d, c0, holds):
    v = c0_condition(HypergraphInstance(d, 3), c0)
    assert v.holds is holds


def test_c0_condition_range():
    with pytest.raises(InvalidRegion):
        c0_condition(HypergraphInstance((1,) * 6, 3), 1.0)


def test_tv_output_bound():
    assert tv_output_bound(0.01, 0.5) == pytest.approx(0.03, abs=1e-15)
    assert tv_output_bound(0, 0.7) == 0
    assert tv_output_bound(0.25, 0.25) == 0.5
    assert runtime_factor(0.25, 0.25) == 2
    with pytest.raises(InvalidRegion):
        runtime_factor(0.5, 0.5)


def test_sampler_eps_feeds_output_bound():
    for eps, c0 in [(0.01, 0.5), (0.1, 0.2)]:
        assert tv_output_bound(sampler_eps(eps, c0), c0) == pytest.approx(eps)


def test_gmw_exact_when_no_collisions():
    f = gmw_log_count(BipartiteDegreeSequence((1,) * 6, (3, 3)))
    assert f.value == pytest.approx(math.log(20), abs=1e-12)


def test_gmw_small_flagged():
    f = gmw_log_count(BipartiteDegreeSequence((2, 2, 1, 1), (3, 3)))
    assert f.value == pytest.approx(math.log(5) - 48 / 72, abs=1e-12)
    assert f.value == pytest.approx(0.9428, abs=1e-4)
    assert not f.valid


def test_gmw_sum_mismatch():
    with pytest.raises(DegreeSumMismatch):
        gmw_log_count(BipartiteDegreeSequence((2, 2), (3, 3)))


def test_mixing_regular_value():
    v = mixing_budget_regular(4, 3, 1 / math.e)
    assert v == pytest.approx(math.log(32 * 3**17 * 4**6 * (24 * math.log(24) + 1)), rel=1e-12)
    assert v == pytest.approx(34.81, abs=5e-3)


@pytest.mark.parametrize("n, d, eps", [(4, 3, 0.1), (10, 2, 1e-3), (7, 5, 0.3)])
def test_mixing_regular_eps_halving(n, d, eps):
    diff = math.exp(mixing_budget_regular(n, d, eps / 2)) - math.exp(mixing_budget_regular(n, d, eps))
    assert diff == pytest.approx(32 * d**17 * n**6 * math.log(2), rel=1e-9)


def test_mixing_regular_degree_one():
    n, eps = 9, 0.05
    expected = 32 * n**6 * (2 * n * math.log(2 * n) + math.log(1 / eps))
    assert math.exp(mixing_budget_regular(n, 1, eps)) == pytest.approx(expected, rel=1e-12)


def test_mixing_irregular_value():
    inst = HypergraphInstance((3,) * 12, 3)
    f = mixing_budget_irregular(inst, 1 / math.e)
    direct = 10 * math.log(3) + 7 * math.log(36) + math.log(18 * math.log(36) + 1)
    assert f.value == pytest.approx(direct, rel=1e-12)
    assert f.value == pytest.approx(40.2529, abs=1e-4)
    assert not f.valid  # 3 > sqrt(36)/3 = 2


def test_mixing_irregular_eps_one():
    inst = HypergraphInstance((3,) * 300, 3)
    f = mixing_budget_irregular(inst, 1.0)
    assert f.value == pytest.approx(
        10 * math.log(3) + 7 * math.log(900) + math.log(450 * math.log(900)), rel=1e-12)
    assert f.valid


def test_mixing_irregular_flag_only():
    a = HypergraphInstance((3,) * 300, 3)
    b = HypergraphInstance((11,) + (3,) * 296 + (1,), 3)
    assert b.M == a.M and b.d_max == 11
    fa, fb = mixing_budget_irregular(a, 0.1), mixing_budget_irregular(b, 0.1)
    assert fa.valid and not fb.valid
    assert fb.value == pytest.approx(fa.value + 10 * math.log(11 / 3))


@given(st.integers(6, 30), st.integers(3, 6))
def test_regular_bound_nonincreasing_in_d(n, k):
    ds = [d for d in range(1, n + 1) if (n * d) % k == 0]
    vals = [regular_simplicity_bound_exact(n, d, k) for d in ds]
    assert all(a >= b for a, b in zip(vals, vals[1:]))


@given(st.integers(3, 40), st.integers(1, 6), st.integers(3, 5))
def test_irregular_equals_regular_on_regular(n, d, k):
    if (n * d) % k or d > n * d // k:
        return
    inst = HypergraphInstance((d,) * n, k)
    assert irregular_simplicity_bound(inst).value == pytest.approx(
        regular_simplicity_bound(n, d, k), abs=1e-12)


@given(st.lists(st.integers(1, 5), min_size=3, max_size=40), st.integers(3, 5))
def test_log_space_matches_exact(d, k):
    d = d + [1] * ((-sum(d)) % k)
    try:
        inst = HypergraphInstance(tuple(d), k)
    except DegreeExceedsEdges:
        return
    if inst.m < 2:
        return
    exact = bounds.irregular_collision_ratio_exact(inst)
    logv = bounds.irregular_collision_log_ratio(inst)
    assert math.exp(logv) == pytest.approx(float(exact), rel=1e-10)


def test_report_fields_and_roundtrip():
    rep = bounds_report(HypergraphInstance((1,) * 6, 3), c0=0.25, eps=0.25)
    assert rep.regular_simplicity_lower_bound == 0.95
    assert rep.fpaus_cap == 4
    d = json.loads(rep.to_json())
    assert set(d["gmw_log_count"]) == {"ln"}
    assert BoundsReport.from_dict(d) == rep


def test_report_k2_out_of_range():
    rep = bounds_report(HypergraphInstance((1,) * 4, 2))
    assert rep.theorem_range == "out of theorem range"
    assert rep.irregular_bound_valid is False

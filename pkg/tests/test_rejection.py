import math
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from hypersample import oracle
from hypersample.core import HypergraphInstance
from hypersample.errors import Fail, InvalidRegion
from hypersample.rejection import (
    RejectionStats,
    SamplerHandle,
    config_handle,
    fpaus_cap,
    geometric_tail_check,
    hypergraph_sampling,
    sample_many,
    switch_handle,
)
from hypersample.simplicity import is_h_simple
from hypersample.stats import tv_distance, uniform


def test_six_ones_first_iteration(rng, six_ones):
    handle = oracle.exact_uniform_handle(six_ones)
    hist = Counter()
    for _ in range(20_000):
        h, stats = hypergraph_sampling(six_ones, handle, rng)
        assert stats.iterations == 1 and stats.verdicts == [True]
        hist[h.encode()] += 1
    assert len(hist) == 10
    assert tv_distance(hist, uniform(hist)) < 0.02


def test_empty_simple_set_fails_at_cap(rng, two_two_two):
    handle = oracle.exact_uniform_handle(two_two_two)
    with pytest.raises(Fail) as err:
        hypergraph_sampling(two_two_two, handle, rng, cap=4)
    assert err.value.attempts == 4
    assert err.value.stats.verdicts == [False] * 4


def test_mean_iterations(rng, mixed):
    p = oracle.enumerate_bipartite(mixed).p_simple
    assert p == Fraction(30, 31)
    handle = oracle.exact_uniform_handle(mixed)
    iters = [hypergraph_sampling(mixed, handle, rng)[1].iterations for _ in range(10**4)]
    assert abs(np.mean(iters) - 1 / p) <= 0.05 / p


@pytest.mark.parametrize("c0, eps, cap", [(0.25, 0.25, 4), (0.5, 0.1, 5)])
def test_fpaus_cap(c0, eps, cap):
    assert fpaus_cap(c0, eps) == cap


def test_fpaus_cap_invalid():
    with pytest.raises(InvalidRegion):
        fpaus_cap(0.9, 0.2)


def test_tail_all_ones():
    chk = geometric_tail_check([1] * 100, 1, 1)
    assert chk.passed and chk.fraction == 0


def test_tail_geometric_half(rng):
    x = rng.geometric(0.5, size=100_000)
    chk = geometric_tail_check(x, 2, 2)
    assert chk.passed
    assert abs(chk.fraction - 1 / 16) < 0.005


def test_tail_constant_fails():
    assert not geometric_tail_check([100] * 50, 1, 3).passed


def test_tail_bound_needs_integer_threshold():
    # exact geometric tail P(X > t/p) = (1-p)^floor(t/p); flooring can exceed exp(-t)
    p = Fraction(9, 16)
    exact = (1 - p) ** math.floor(1 / p)
    assert exact == Fraction(7, 16) and float(exact) > math.exp(-1)
    for t in (1, 2, 3):
        assert float(Fraction(1, 31) ** math.floor(t * Fraction(31, 30))) <= math.exp(-t)
        # integer thresholds satisfy the bound: (1-p)^(1/p) <= 1/e
        for q in range(1, 40):
            assert (1 - 1 / q) ** (t * q) <= math.exp(-t) + 1e-15


def test_stats_merge():
    a = RejectionStats(2, [False, True], 0.5, 0.1)
    b = RejectionStats(1, [True], 0.25, 0.2)
    m = a.merge(b)
    assert m.iterations == 3 and m.verdicts == [False, True, True]
    assert m.sampler_time == 0.75 and m.test_time == pytest.approx(0.3)
    assert m.acceptance_rate == pytest.approx(2 / 3)
    assert a.merge(b.merge(a)).verdicts == a.merge(b).merge(a).verdicts


def _biased_handle(states, weights):
    p = np.asarray(weights, float)
    p /= p.sum()

    def draw(rng):
        return states[int(rng.choice(len(states), p=p))]

    return SamplerHandle("biased", draw), p


def test_fail_probability_under_cap(rng):
    # handle biased against H-simple states, d_TV = eps, P(B*) = 1 - c0
    inst = HypergraphInstance((3, 3, 3, 1, 1, 1), 3)
    states = oracle.enumerate_states(inst)
    c0 = float(1 - oracle.enumerate_bipartite(inst).p_simple)
    weights = [0.8 if is_h_simple(b) else 1.0 for b in states]
    handle, sigma = _biased_handle(states, weights)
    eps = 0.5 * float(np.abs(sigma - 1 / len(states)).sum())
    assert c0 + eps < 1
    cap = fpaus_cap(c0, eps)
    fails, runs = 0, 20_000
    for _ in range(runs):
        try:
            hypergraph_sampling(inst, handle, rng, cap=cap)
        except Fail:
            fails += 1
    assert fails / runs <= math.exp(-2)


def test_sample_many_independent_of_jobs(mixed):
    handle = switch_handle(mixed, 50)
    one = [h for h, _ in sample_many(mixed, handle, 12, seed=5)]
    four = [h for h, _ in sample_many(mixed, handle, 12, seed=5, jobs=4)]
    assert one == four


def test_config_handle_outputs_valid_graphs(rng, mixed):
    handle = config_handle(mixed)
    assert handle.eps == 0
    for _ in range(50):
        b = handle(rng)
        assert b.left_degrees() == mixed.d


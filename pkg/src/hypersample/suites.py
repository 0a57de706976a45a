"""Property sweeps over families of small instances, checked against the oracle.

Each suite returns a :class:`SuiteResult` with one row per instance (or
per checked pair) so callers can print verdicts line by line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from hypersample import oracle
from hypersample.bounds import regular_simplicity_bound_exact
from hypersample.core import BipartiteDegreeSequence, HypergraphInstance, RngSeed
from hypersample.errors import InvalidInstance, TooLarge
from hypersample.rejection import geometric_tail_check, hypergraph_sampling
from hypersample.simplicity import phi
from hypersample.stats import tv_distance, uniform


@dataclass
class SuiteResult:
    name: str
    rows: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.rows)

    @property
    def failures(self) -> list[tuple[str, bool, str]]:
        return [r for r in self.rows if not r[1]]

    def add(self, label, ok, detail=""):
        self.rows.append((label, bool(ok), detail))

    def lines(self) -> list[str]:
        out = [f"{'PASS' if ok else 'FAIL'} {self.name} {label} {detail}".rstrip()
               for label, ok, detail in self.rows]
        out.append(f"{self.name}: {'pass' if self.passed else 'FAIL'} "
                   f"({len(self.rows) - len(self.failures)}/{len(self.rows)})")
        return out


def _instances(max_n, max_M, k, min_n=1):
    for n in range(min_n, max_n + 1):
        for M in range(k, max_M + 1, k):
            for d in oracle.partitions(n, M):
                try:
                    yield HypergraphInstance(d, k)
                except InvalidInstance:
                    continue


def regular_bound_sweep(max_n=8, max_d=4, k=3, limit=oracle.DEFAULT_LIMIT) -> SuiteResult:
    """Exact P(H-simple) against the regular lower bound."""
    res = SuiteResult("thm12")
    for n in range(k, max_n + 1):
        for d in range(1, max_d + 1):
            if (n * d) % k or d > n * d // k:
                continue
            bds = BipartiteDegreeSequence((d,) * n, (k,) * (n * d // k))
            try:
                r = oracle.enumerate_bipartite(bds, limit)
            except TooLarge:
                continue
            bound = regular_simplicity_bound_exact(n, d, k)
            res.add(f"n={n} d={d} k={k}", r.p_simple >= bound,
                    f"p={float(r.p_simple):.6f} bound={float(bound):.6f}")
    return res


def collision_constant_sweep(max_n=6, max_M=12, k=3, limit=oracle.DEFAULT_LIMIT) -> SuiteResult:
    """``1 - c1 c2 C(m,2)/C(n,k) <= P(H-simple)`` with exact constants."""
    res = SuiteResult("lemma31")
    for inst in _instances(max_n, max_M, k):
        try:
            r = oracle.enumerate_bipartite(inst, limit)
            if r.count_B == 0:
                continue
            c = oracle.exact_constants(inst, limit)
        except TooLarge:
            continue
        lower = 1 - c.c1 * c.c2 * Fraction(math.comb(inst.m, 2), math.comb(inst.n, k))
        res.add(f"d={inst.d}", lower <= r.p_simple,
                f"c1={c.c1} c2={c.c2} lower={float(lower):.6f} p={float(r.p_simple):.6f}")
    return res


def balance_sweep(max_n=5, max_M=12, k=3, limit=oracle.DEFAULT_LIMIT) -> SuiteResult:
    """Count monotonicity under moving one unit of degree from g to h (d_g >= d_h + 2).

    Left degrees range over all ordered sequences with zeros allowed.
    """
    res = SuiteResult("prop42")

    @lru_cache(maxsize=None)
    def count(d, m):
        return oracle.count_bipartite(BipartiteDegreeSequence(d, (k,) * m), limit)

    for n in range(2, max_n + 1):
        for M in range(k, max_M + 1, k):
            m = M // k
            for d in oracle.degree_sequences(n, M, min_degree=0):
                for g in range(n):
                    for h in range(n):
                        if g == h or d[g] < d[h] + 2:
                            continue
                        before = count(d, m)
                        after = count(oracle.balanced(d, g, h), m)
                        res.add(f"d={d} g={g + 1} h={h + 1}", before <= after,
                                f"{before}<={after}")
    return res


def uniformity_suite(seed=1, draws=100_000, threshold=0.02,
                     instances=((2, 2, 2, 1, 1, 1), (3, 3, 3, 1, 1, 1), (3, 3, 2, 2, 1, 1)),
                     k=3) -> SuiteResult:
    """Rejection sampling with an exactly uniform bipartite sampler vs uniform on H_k(d)."""
    res = SuiteResult("uniformity")
    for i, d in enumerate(instances):
        inst = HypergraphInstance(d, k)
        handle = oracle.exact_uniform_handle(inst)
        rng = RngSeed(seed, i).generator()
        hist: dict[str, int] = {}
        for _ in range(draws):
            h, _ = hypergraph_sampling(inst, handle, rng)
            key = h.encode()
            hist[key] = hist.get(key, 0) + 1
        targets = {h.encode() for b in handle.states if (h := phi(b))}
        tv = tv_distance(hist, uniform(targets))
        res.add(f"d={d}", tv < threshold, f"|H|={len(targets)} tv={tv:.5f}")
    return res


def tail_suite(seed=1, runs=10_000, d=(2, 2, 2, 1, 1, 1), k=3, ts=(1, 2, 3)) -> SuiteResult:
    """Iteration counts with an exact sampler: mean vs 1/p and geometric tails."""
    res = SuiteResult("tail")
    inst = HypergraphInstance(d, k)
    p = oracle.enumerate_bipartite(inst).p_simple
    handle = oracle.exact_uniform_handle(inst)
    rng = RngSeed(seed, 0).generator()
    iters = np.array([hypergraph_sampling(inst, handle, rng)[1].iterations for _ in range(runs)])
    q = float(1 / p)
    mean = float(iters.mean())
    res.add(f"d={d} mean", abs(mean - q) <= 0.05 * q, f"mean={mean:.4f} 1/p={q:.4f}")
    for t in ts:
        chk = geometric_tail_check(iters, q, t)
        res.add(f"d={d} t={t}", chk.passed, f"frac={chk.fraction:.4f} bound={chk.bound:.4f}")
    return res


def switch_suite(max_n=6, max_M=12, k=3, max_states=30) -> SuiteResult:
    """Exact switch-chain transition matrices: uniform fixed point and connectivity."""
    from hypersample.switch_chain import transition_matrix

    res = SuiteResult("switch")
    for inst in _instances(max_n, max_M, k):
        if oracle.count_bipartite(inst) > max_states:
            continue
        states = oracle.enumerate_states(inst)
        if not states:
            continue
        P = np.array(transition_matrix(states), dtype=float)
        N = len(states)
        u = np.full(N, 1 / N)
        resid = float(np.abs(u @ P - u).max())
        res.add(f"d={inst.d}", resid < 1e-12 and _connected(P),
                f"|B|={N} residual={resid:.2e} rows={np.abs(P.sum(1) - 1).max():.1e}")
    return res


def _connected(P) -> bool:
    N = len(P)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in np.flatnonzero(P[i] > 0):
            if j not in seen:
                seen.add(int(j))
                stack.append(int(j))
    return len(seen) == N


SUITES = {
    "thm12": regular_bound_sweep,
    "lemma31": collision_constant_sweep,
    "prop42": balance_sweep,
    "uniformity": uniformity_suite,
    "tail": tail_suite,
    "switch": switch_suite,
}

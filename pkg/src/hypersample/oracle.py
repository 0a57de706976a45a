"""Exact ground truth for small instances.

Three independent exact routes are provided:

* :func:`count_bipartite` counts B(d, kvec) by dynamic programming over
  right nodes, with the left residual degrees kept as a multiset (the count
  only depends on how many left nodes have each residual degree).
* :func:`count_hypergraphs` counts simple k-uniform hypergraphs by
  eliminating one node at a time, again memoised on the residual multiset.
* :func:`enumerate_states` materialises B(d, kvec) by backtracking with
  Gale-Ryser pruning.

Everything returned is an exact integer or :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import NamedTuple

from hypersample.core import (
    BipartiteDegreeSequence,
    BipartiteGraph,
    HypergraphInstance,
    as_generator,
)
from hypersample.errors import EmptySpace, PreconditionViolated, TooLarge

DEFAULT_LIMIT = 10**7


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def tick(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise TooLarge(f"search exceeded {self.limit} nodes")


def _as_bds(x) -> BipartiteDegreeSequence:
    return x.bipartite() if isinstance(x, HypergraphInstance) else x


def is_bigraphic(d, kvec) -> bool:
    """Gale-Ryser test for the existence of a simple bipartite realization."""
    if sum(d) != sum(kvec) or min(d, default=0) < 0 or min(kvec, default=0) < 0:
        return False
    ds = sorted(d, reverse=True)
    left = 0
    for r, x in enumerate(ds, start=1):
        left += x
        if left > sum(min(kj, r) for kj in kvec):
            return False
    return True


# -- counting B(d, kvec) ----------------------------------------------------

def _compositions(total, caps):
    """Vectors t with 0 <= t[i] <= caps[i] and sum(t) == total."""
    if not caps:
        if total == 0:
            yield ()
        return
    rest = sum(caps[1:])
    for t0 in range(max(0, total - rest), min(caps[0], total) + 1):
        for tail in _compositions(total - t0, caps[1:]):
            yield (t0,) + tail


def count_bipartite(bds, limit: int = DEFAULT_LIMIT) -> int:
    """Exact ``|B(d, kvec)|``."""
    bds = _as_bds(bds)
    if sum(bds.d) != sum(bds.kvec):
        return 0
    top = bds.d_max
    classes = [0] * (top + 1)
    for x in bds.d:
        classes[x] += 1
    kvec = sorted(bds.kvec, reverse=True)
    budget = _Budget(limit)
    memo: dict = {}

    def rec(j, cls):
        if j == len(kvec):
            return 1
        key = (j, cls)
        if key in memo:
            return memo[key]
        budget.tick()
        total = 0
        # t[r-1] nodes taken from residual class r, r = 1..top
        for t in _compositions(kvec[j], cls[1:]):
            w = 1
            new = list(cls)
            for r, tr in enumerate(t, start=1):
                if tr:
                    w *= math.comb(cls[r], tr)
                    new[r] -= tr
                    new[r - 1] += tr
            total += w * rec(j + 1, tuple(new))
        memo[key] = total
        return total

    return rec(0, tuple(classes))


# -- counting H_k(d) ----------------------------------------------------------

def count_hypergraphs(d, k: int, limit: int = DEFAULT_LIMIT) -> int:
    """Exact number of simple k-uniform hypergraphs with degree sequence ``d``."""
    budget = _Budget(limit)
    memo: dict = {}

    def rec(res):
        if not res:
            return 1
        if res in memo:
            return memo[res]
        budget.tick()
        r, others = res[0], list(res[1:])
        total = 0
        if r <= math.comb(len(others), k - 1):
            for used in _subset_sets(r, k - 1, others, budget):
                nxt = tuple(sorted((c - u for c, u in zip(others, used) if c - u), reverse=True))
                total += rec(nxt)
        memo[res] = total
        return total

    start = tuple(sorted((x for x in d if x), reverse=True))
    if sum(start) % k:
        return 0
    return rec(start)


def _subset_sets(r, size, caps, budget):
    """Yield usage vectors of r distinct ``size``-subsets of positions within ``caps``."""
    L = len(caps)
    pool = [c for c in combinations(range(L), size)]
    used = [0] * L

    def rec(start, left):
        if left == 0:
            yield tuple(used)
            return
        for idx in range(start, len(pool) - left + 1):
            s = pool[idx]
            if all(used[p] < caps[p] for p in s):
                budget.tick()
                for p in s:
                    used[p] += 1
                yield from rec(idx + 1, left - 1)
                for p in s:
                    used[p] -= 1

    yield from rec(0, r)


# -- materialising B(d, kvec) -----------------------------------------------

def enumerate_states(bds, limit: int = DEFAULT_LIMIT) -> list[BipartiteGraph]:
    """All elements of B(d, kvec), sorted by neighborhood tuples."""
    bds = _as_bds(bds)
    if not is_bigraphic(bds.d, bds.kvec):
        return []
    order = sorted(range(bds.m), key=lambda j: -bds.kvec[j])
    residual = list(bds.d)
    rows: list = [None] * bds.m
    out: list[BipartiteGraph] = []
    budget = _Budget(limit)

    def rec(pos):
        if pos == len(order):
            out.append(BipartiteGraph(bds.n, tuple(rows)))
            return
        budget.tick()
        j = order[pos]
        avail = [i for i in range(bds.n) if residual[i] > 0]
        rest = [bds.kvec[jj] for jj in order[pos + 1:]]
        for nb in combinations(avail, bds.kvec[j]):
            for i in nb:
                residual[i] -= 1
            if is_bigraphic(residual, rest):
                rows[j] = nb
                rec(pos + 1)
            for i in nb:
                residual[i] += 1

    rec(0)
    out.sort(key=lambda b: b.nbrs)
    return out


# -- results ------------------------------------------------------------------

@dataclass
class OracleResult:
    count_B: int
    count_B_star: int
    count_H: int
    p_simple: Fraction
    c1: Fraction | None = None
    c2: Fraction | None = None
    degenerate: bool | None = None
    state_list: list[BipartiteGraph] | None = field(default=None, repr=False)

    def summary(self) -> str:
        p = self.p_simple
        return f"B={self.count_B} B*={self.count_B_star} H={self.count_H} p={p}"


def _count_h_simple(states) -> int:
    return sum(1 for b in states if len(set(b.nbrs)) == len(b.nbrs))


def enumerate_bipartite(
    bds, limit: int = DEFAULT_LIMIT, materialize: bool = False, constants: bool = False
) -> OracleResult:
    """Exact counts for B(d, kvec) and its H-simple subset.

    For half-regular sequences ``count_B_star = m! * count_H`` with
    ``count_H`` counted directly; otherwise the states are materialised
    and checked. ``constants=True`` also fills ``c1``/``c2``.
    """
    bds = _as_bds(bds)
    m = bds.m
    states = enumerate_states(bds, limit) if materialize else None
    count_B = count_bipartite(bds, limit)
    if bds.is_half_regular and m:
        k = bds.kvec[0]
        count_H = count_hypergraphs(bds.d, k, limit) if count_B else 0
        count_B_star = math.factorial(m) * count_H
    else:
        if states is None:
            states = enumerate_states(bds, limit)
        count_B_star = _count_h_simple(states)
        count_H = count_B_star // math.factorial(m)
    p = Fraction(count_B_star, count_B) if count_B else Fraction(0)
    res = OracleResult(count_B, count_B_star, count_H, p, state_list=states)
    if constants and bds.is_half_regular and m:
        c = exact_constants(bds, limit)
        res.c1, res.c2, res.degenerate = c.c1, c.c2, c.degenerate
    return res


class Constants(NamedTuple):
    c1: Fraction
    c2: Fraction
    degenerate: bool


def exact_constants(inst, limit: int = DEFAULT_LIMIT) -> Constants:
    """Smallest constants ``c1, c2`` for the neighborhood-collision lemma.

    ``c1 = C(n,k) max_W P(N(y) = W)`` and ``c2 = max_W P(N(y') = W | N(y) = W)
    / P(N(y') = W)`` over W with positive probability, under the uniform law
    on B(d, k). All right nodes are exchangeable, so one ``y`` (and one
    pair ``y != y'``) suffices. ``degenerate`` is set when some k-set W has
    probability zero; ``c2`` is 0 when ``m < 2``.
    """
    bds = _as_bds(inst)
    n, m = bds.n, bds.m
    if not bds.is_half_regular or m == 0:
        raise PreconditionViolated("exact_constants needs a half-regular sequence with m >= 1")
    k = bds.kvec[0]
    total = count_bipartite(bds, limit)
    if total == 0:
        raise EmptySpace("B(d, k) is empty")
    budget = _Budget(limit)
    c1 = Fraction(0)
    c2 = Fraction(0)
    degenerate = False
    for W in combinations(range(n), k):
        budget.tick()
        d1 = list(bds.d)
        for i in W:
            d1[i] -= 1
        single = 0
        if min(d1) >= 0:
            single = count_bipartite(BipartiteDegreeSequence(d1, (k,) * (m - 1)), limit)
        if single == 0:
            degenerate = True
            continue
        p1 = Fraction(single, total)
        c1 = max(c1, p1)
        if m < 2:
            continue
        d2 = list(d1)
        for i in W:
            d2[i] -= 1
        double = 0
        if min(d2) >= 0:
            double = count_bipartite(BipartiteDegreeSequence(d2, (k,) * (m - 2)), limit)
        c2 = max(c2, Fraction(double, total) / (p1 * p1))
    return Constants(c1 * math.comb(n, k), c2, degenerate)


def constants_from_states(states: list[BipartiteGraph], n: int, k: int) -> Constants:
    """Same constants computed by direct counting over a materialised state list."""
    total = len(states)
    m = states[0].m
    c1 = c2 = Fraction(0)
    degenerate = False
    for W in combinations(range(n), k):
        for y in range(m):
            hits = [b for b in states if b.nbrs[y] == W]
            p = Fraction(len(hits), total)
            if p == 0:
                degenerate = True
                continue
            c1 = max(c1, p)
            for y2 in range(m):
                if y2 == y:
                    continue
                p2 = Fraction(sum(1 for b in states if b.nbrs[y2] == W), total)
                cond = Fraction(sum(1 for b in hits if b.nbrs[y2] == W), len(hits))
                if p2:
                    c2 = max(c2, cond / p2)
    return Constants(c1 * math.comb(n, k), c2, degenerate)


# -- degree balancing ----------------------------------------------------------

class BalanceCheck(NamedTuple):
    count_before: int
    count_after: int
    verdict: bool


def balanced(d, g: int, h: int) -> tuple[int, ...]:
    d2 = list(d)
    d2[g] -= 1
    d2[h] += 1
    return tuple(d2)


def verify_proposition_balanced(bds, g: int, h: int, limit: int = DEFAULT_LIMIT) -> BalanceCheck:
    """Check ``|B(d, kvec)| <= |B(d', kvec)|`` where d' moves one unit from g to h.

    ``g`` and ``h`` are 0-based and need ``d[g] >= d[h] + 2``.
    """
    bds = _as_bds(bds)
    if g == h or not (0 <= g < bds.n and 0 <= h < bds.n) or bds.d[g] < bds.d[h] + 2:
        raise PreconditionViolated(f"need d[g] >= d[h] + 2, got g={g}, h={h}, d={bds.d}")
    before = count_bipartite(bds, limit)
    after = count_bipartite(BipartiteDegreeSequence(balanced(bds.d, g, h), bds.kvec), limit)
    return BalanceCheck(before, after, before <= after)


def exact_uniform_handle(inst, limit: int = DEFAULT_LIMIT):
    """Sampler handle drawing uniformly from the materialised B(d, k)."""
    from hypersample.rejection import SamplerHandle

    states = enumerate_states(inst, limit)
    if not states:
        raise EmptySpace("B(d, k) is empty; nothing to sample")
    N = len(states)

    def draw(rng):
        return states[int(as_generator(rng).integers(N))]

    handle = SamplerHandle("oracle", draw, eps=0.0, cost_model="O(1) table lookup")
    handle.states = states
    return handle


def degree_sequences(n: int, total: int, min_degree: int = 1, max_degree: int | None = None):
    """All length-``n`` sequences with entries in ``[min_degree, max_degree]`` summing to ``total``."""
    hi = total if max_degree is None else max_degree
    for t in product(range(min_degree, hi + 1), repeat=n):
        if sum(t) == total:
            yield t


def partitions(n: int, total: int, min_degree: int = 1, max_degree: int | None = None):
    """Nonincreasing length-``n`` sequences summing to ``total``."""
    hi = total if max_degree is None else max_degree

    def rec(left, slots, cap):
        if slots == 0:
            if left == 0:
                yield ()
            return
        for x in range(min(cap, left - min_degree * (slots - 1)), min_degree - 1, -1):
            if x * slots < left:
                break
            for tail in rec(left - x, slots - 1, x):
                yield (x,) + tail

    yield from rec(total, n, hi)

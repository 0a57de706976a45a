"""Switch Markov chain on bipartite graphs with fixed degrees.

One step picks an unordered pair of distinct incidences ``(x1, y1)``,
``(x2, y2)`` uniformly at random. If ``x1 != x2``, ``y1 != y2`` and neither
``(x1, y2)`` nor ``(x2, y1)`` is present, the pair is replaced by
``(x1, y2), (x2, y1)``; otherwise the chain holds. The proposal is
symmetric and acceptance is 0/1, so the uniform distribution is
stationary.

State layout: incidences live in a flat array of "slots" grouped by right
node (right degrees never change, so the grouping is fixed). A slot stores
its left endpoint. Choosing an incidence is choosing a slot, and a switch
is a swap of two slot values, so no index maintenance is needed. Adjacency
queries scan one right node's slots, costing O(k_max) per step.
"""

from __future__ import annotations

import math

import numba
import numpy as np

from hypersample.core import (
    BipartiteDegreeSequence,
    BipartiteGraph,
    HypergraphInstance,
    as_generator,
)
from hypersample.errors import NonGraphical


def initial_graph(bds: BipartiteDegreeSequence) -> BipartiteGraph:
    """Deterministic greedy realization of ``(d, kvec)``.

    Right nodes are processed by nonincreasing degree (stable in index);
    each is joined to the left nodes of largest residual degree, smaller
    index first on ties. The greedy choice succeeds exactly when the
    sequence is bigraphic.
    """
    if isinstance(bds, HypergraphInstance):
        bds = bds.bipartite()
    residual = list(bds.d)
    rows: list[tuple[int, ...]] = [()] * bds.m
    for j in sorted(range(bds.m), key=lambda j: -bds.kvec[j]):
        kj = bds.kvec[j]
        picks = sorted(range(bds.n), key=lambda i: (-residual[i], i))[:kj]
        if len(picks) < kj or any(residual[i] == 0 for i in picks):
            raise NonGraphical(f"degree sequence {bds.d} / {bds.kvec} is not bigraphic")
        for i in picks:
            residual[i] -= 1
        rows[j] = tuple(sorted(picks))
    return BipartiteGraph(bds.n, tuple(rows))


@numba.njit(cache=True)
def _run_switches(slots, slot_right, offsets, first, second):
    accepted = 0
    for t in range(first.shape[0]):
        s1 = first[t]
        s2 = second[t]
        y1 = slot_right[s1]
        y2 = slot_right[s2]
        if y1 == y2:
            continue
        x1 = slots[s1]
        x2 = slots[s2]
        if x1 == x2:
            continue
        ok = True
        for s in range(offsets[y2], offsets[y2 + 1]):
            if slots[s] == x1:
                ok = False
                break
        if ok:
            for s in range(offsets[y1], offsets[y1 + 1]):
                if slots[s] == x2:
                    ok = False
                    break
        if ok:
            slots[s1] = x2
            slots[s2] = x1
            accepted += 1
    return accepted


def draw_pairs(rng: np.random.Generator, M: int, steps: int) -> tuple[np.ndarray, np.ndarray]:
    """``steps`` uniform ordered pairs of distinct slots in ``[0, M)``."""
    first = rng.integers(0, M, size=steps)
    second = rng.integers(0, M - 1, size=steps)
    second += second >= first
    return first, second


class ChainState:
    """Mutable switch-chain state owned by a single chain."""

    def __init__(self, graph: BipartiteGraph):
        self.n = graph.n
        degs = graph.right_degrees()
        self.offsets = np.concatenate([[0], np.cumsum(degs)]).astype(np.int64)
        self.slot_right = np.repeat(np.arange(graph.m), degs).astype(np.int64)
        self.slots = np.fromiter(
            (x for row in graph.nbrs for x in row), dtype=np.int64, count=int(self.offsets[-1])
        )
        self.step_count = 0
        self.accepted = 0

    @property
    def M(self) -> int:
        return int(self.slots.size)

    @property
    def graph(self) -> BipartiteGraph:
        rows = (
            tuple(sorted(self.slots[a:b].tolist()))
            for a, b in zip(self.offsets[:-1], self.offsets[1:])
        )
        return BipartiteGraph(self.n, tuple(rows))

    def edge_index(self) -> list[tuple[int, int]]:
        return list(zip(self.slots.tolist(), self.slot_right.tolist()))

    def apply(self, first: np.ndarray, second: np.ndarray) -> int:
        """Run the proposals ``(first[t], second[t])`` in order."""
        first = np.asarray(first, dtype=np.int64)
        second = np.asarray(second, dtype=np.int64)
        acc = _run_switches(self.slots, self.slot_right, self.offsets, first, second)
        self.step_count += first.shape[0]
        self.accepted += acc
        return acc

    def run(self, steps: int, rng) -> "ChainState":
        rng = as_generator(rng)
        if self.M < 2 or steps <= 0:
            self.step_count += max(steps, 0)
            return self
        # proposals drawn in blocks to bound memory on long runs
        block = 1 << 20
        left = steps
        while left:
            t = min(left, block)
            self.apply(*draw_pairs(rng, self.M, t))
            left -= t
        return self


def switch_step(state: ChainState, rng) -> ChainState:
    return state.run(1, rng)


def switch_sample(inst, steps: int, rng) -> BipartiteGraph:
    """Run ``steps`` switch moves from :func:`initial_graph` and return the result.

    ``inst`` may be a :class:`HypergraphInstance` or a
    :class:`BipartiteDegreeSequence`.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    bds = inst.bipartite() if isinstance(inst, HypergraphInstance) else inst
    state = ChainState(initial_graph(bds))
    return state.run(steps, rng).graph


def switch_result(b: BipartiteGraph, e1: tuple[int, int], e2: tuple[int, int]) -> BipartiteGraph:
    """Graph after proposing incidences ``e1 = (x1, y1)``, ``e2 = (x2, y2)``.

    Pure-Python statement of the move, used for exact transition matrices.
    """
    (x1, y1), (x2, y2) = e1, e2
    if y1 == y2 or x1 == x2 or x1 in b.nbrs[y2] or x2 in b.nbrs[y1]:
        return b
    rows = list(b.nbrs)
    rows[y1] = tuple(sorted(set(rows[y1]) - {x1} | {x2}))
    rows[y2] = tuple(sorted(set(rows[y2]) - {x2} | {x1}))
    return BipartiteGraph(b.n, tuple(rows))


def transition_matrix(states: list[BipartiteGraph]):
    """Exact one-step transition matrix over an enumerated state space.

    Entries are :class:`fractions.Fraction`; row ``i`` enumerates all
    ``C(M, 2)`` unordered incidence pairs of ``states[i]``.
    """
    from fractions import Fraction

    index = {s: i for i, s in enumerate(states)}
    N = len(states)
    P = [[Fraction(0)] * N for _ in range(N)]
    for i, b in enumerate(states):
        inc = b.edges()
        total = math.comb(len(inc), 2)
        if total == 0:
            P[i][i] = Fraction(1)
            continue
        counts: dict[int, int] = {}
        for a in range(len(inc)):
            for c in range(a + 1, len(inc)):
                j = index[switch_result(b, inc[a], inc[c])]
                counts[j] = counts.get(j, 0) + 1
        for j, cnt in counts.items():
            P[i][j] = Fraction(cnt, total)
    return P


def step_budget(inst: HypergraphInstance, eps: float, cap: int | None = None) -> int:
    """Switch steps guaranteeing TV <= eps by the half-regular mixing bound.

    The bound is astronomically conservative, so ``cap`` (if given) limits
    the returned value.
    """
    from hypersample.bounds import mixing_budget_irregular

    ln_budget = mixing_budget_irregular(inst, eps).value
    budget = math.inf if ln_budget > 700 else math.ceil(math.exp(ln_budget))
    if cap is not None:
        budget = min(budget, cap)
    if budget == math.inf:
        raise OverflowError("step budget exceeds float range; pass a cap")
    return int(budget)

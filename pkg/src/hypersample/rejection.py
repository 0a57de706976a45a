"""Rejection sampling of simple hypergraphs through bipartite graphs.

:func:`hypergraph_sampling` repeatedly asks a bipartite sampler for an
element of B(d, k) and stops at the first H-simple one. Every simple
hypergraph has exactly ``m!`` H-simple preimages, so an exactly uniform
bipartite sampler yields an exactly uniform hypergraph.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, NamedTuple

import numpy as np

from hypersample import config_model, switch_chain
from hypersample.core import BipartiteGraph, Hypergraph, HypergraphInstance, RngSeed, as_generator
from hypersample.errors import Fail, InvalidRegion
from hypersample.simplicity import phi


@dataclass
class SamplerHandle:
    """A black-box sampler for B(d, k).

    ``draw(rng)`` returns one :class:`BipartiteGraph`. ``eps`` is the
    declared total-variation distance of its output law from uniform, if
    known (0 for exact samplers).
    """

    name: str
    draw: Callable[[np.random.Generator], BipartiteGraph]
    eps: float | None = None
    cost_model: str = ""

    def __call__(self, rng) -> BipartiteGraph:
        return self.draw(rng)


@dataclass
class RejectionStats:
    iterations: int = 0
    verdicts: list[bool] = field(default_factory=list)
    sampler_time: float = 0.0
    test_time: float = 0.0

    @property
    def acceptance_rate(self) -> float:
        """Online estimate of P(H-simple) under the sampler's output law."""
        return sum(self.verdicts) / len(self.verdicts) if self.verdicts else math.nan

    def merge(self, other: "RejectionStats") -> "RejectionStats":
        return RejectionStats(
            self.iterations + other.iterations,
            self.verdicts + other.verdicts,
            self.sampler_time + other.sampler_time,
            self.test_time + other.test_time,
        )


def hypergraph_sampling(
    inst: HypergraphInstance, a: SamplerHandle, rng, cap: int | None = None
) -> tuple[Hypergraph, RejectionStats]:
    """Draw from ``a`` until the draw is H-simple; return its hypergraph.

    Without ``cap`` the loop never ends if no H-simple graph exists. With
    ``cap``, :class:`~hypersample.errors.Fail` is raised after ``cap``
    draws; the exception carries the stats as ``.stats``.
    """
    rng = as_generator(rng)
    stats = RejectionStats()
    clock = time.perf_counter
    while cap is None or stats.iterations < cap:
        t0 = clock()
        b = a(rng)
        t1 = clock()
        h = phi(b)
        t2 = clock()
        stats.iterations += 1
        stats.sampler_time += t1 - t0
        stats.test_time += t2 - t1
        ok = isinstance(h, Hypergraph)
        stats.verdicts.append(ok)
        if ok:
            return h, stats
    err = Fail(f"no H-simple graph in {cap} draws from {a.name}", stats.iterations)
    err.stats = stats
    raise err


def fpaus_cap(c0: float, eps: float) -> int:
    """Number of sampler calls after which the capped loop reports Fail."""
    c0f, ef = Fraction(repr(c0)), Fraction(repr(eps))
    if not 0 < c0f < 1 or ef < 0:
        raise InvalidRegion(f"need 0 < c0 < 1 and eps >= 0, got c0={c0}, eps={eps}")
    if c0f + ef >= 1:
        raise InvalidRegion(f"c0 + eps = {c0 + eps} >= 1")
    return math.ceil(2 / (1 - c0f - ef))


class TailCheck(NamedTuple):
    passed: bool
    fraction: float
    bound: float


def geometric_tail_check(iteration_samples, q: float, t: float) -> TailCheck:
    """Check ``P(iterations > t q) <= exp(-t)`` on observed iteration counts.

    A 3-sigma binomial slack is added to the bound.
    """
    x = np.asarray(iteration_samples)
    N = x.size
    frac = float(np.mean(x > t * q)) if N else 0.0
    bound = math.exp(-t)
    slack = 3 * math.sqrt(bound * (1 - bound) / N) if N else 0.0
    return TailCheck(frac <= bound + slack, frac, bound)


def config_handle(inst: HypergraphInstance) -> SamplerHandle:
    """Exactly uniform bipartite sampler from the bipartite configuration model."""
    bds = inst.bipartite()
    return SamplerHandle(
        "config",
        lambda rng: config_model.sample_bipartite(bds, rng),
        eps=0.0,
        cost_model="O(M) per pairing, geometric number of loop rejections",
    )


def switch_handle(inst: HypergraphInstance, steps: int, eps: float | None = None) -> SamplerHandle:
    """Switch chain run for ``steps`` moves from the greedy initial graph per call."""
    bds = inst.bipartite()
    start = switch_chain.initial_graph(bds)

    def draw(rng):
        return switch_chain.ChainState(start).run(steps, rng).graph

    return SamplerHandle("switch", draw, eps=eps, cost_model=f"{steps} switch steps, O(k) each")


def sample_many(
    inst: HypergraphInstance,
    a: SamplerHandle,
    count: int,
    seed: int,
    cap: int | None = None,
    jobs: int = 1,
) -> list[tuple[Hypergraph, RejectionStats]]:
    """``count`` independent draws; draw ``i`` uses stream ``i`` of ``seed``.

    Results are in draw order for any ``jobs``.
    """

    def one(i):
        return hypergraph_sampling(inst, a, RngSeed(seed, i).generator(), cap)

    if jobs <= 1:
        return [one(i) for i in range(count)]
    with ThreadPoolExecutor(jobs) as ex:
        return list(ex.map(one, range(count)))

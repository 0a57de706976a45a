"""Configuration model for k-uniform hypergraphs.

Cell ``i`` holds ``d[i]`` labelled points, ``M`` points in all. A
configuration partitions the points into ``m = M/k`` parts of size ``k``;
shrinking each cell to its node turns parts into (possibly non-simple)
edges. Rejecting until the projection is simple gives an exactly uniform
sample of simple hypergraphs with the given degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hypersample.core import (
    BipartiteDegreeSequence,
    BipartiteGraph,
    Hypergraph,
    HypergraphInstance,
    as_generator,
)
from hypersample.errors import Exhausted


@dataclass(frozen=True, eq=False)
class Configuration:
    """Parts of a point partition.

    ``parts[j]`` holds the ``k`` point labels of part ``j`` and
    ``point_cell[p]`` is the cell (node) owning point ``p``.
    """

    parts: np.ndarray
    point_cell: np.ndarray

    @property
    def n(self) -> int:
        return int(self.point_cell.max()) + 1 if self.point_cell.size else 0

    def cells(self) -> np.ndarray:
        return self.point_cell[self.parts]


@dataclass(frozen=True)
class NotSimple:
    """Projection failure: ``reason`` is ``"loop"`` or ``"repeated edge"``."""

    reason: str
    parts: tuple[int, ...]

    def __bool__(self):
        return False


def point_cells(d) -> np.ndarray:
    return np.repeat(np.arange(len(d)), d)


def random_configuration(inst: HypergraphInstance, rng) -> Configuration:
    """Uniform random partition in O(M): shuffle the points, cut into blocks."""
    rng = as_generator(rng)
    perm = rng.permutation(inst.M)
    return Configuration(perm.reshape(inst.m, inst.k), point_cells(inst.d))


def project(c: Configuration, n: int | None = None) -> Hypergraph | NotSimple:
    rows = np.sort(c.cells(), axis=1)
    if rows.shape[1] > 1:
        loops = np.flatnonzero((rows[:, 1:] == rows[:, :-1]).any(axis=1))
        if loops.size:
            return NotSimple("loop", (int(loops[0]),))
    order = np.lexsort(rows.T[::-1])
    srt = rows[order]
    dup = np.flatnonzero((srt[1:] == srt[:-1]).all(axis=1))
    if dup.size:
        i = int(dup[0])
        return NotSimple("repeated edge", tuple(sorted((int(order[i]), int(order[i + 1])))))
    if n is None:
        n = c.n
    return Hypergraph(n, tuple(map(tuple, srt.tolist())))


def expected_trials_estimate(inst: HypergraphInstance) -> float:
    """Leading-order expected number of configurations per simple one.

    Returns ``exp((k-1) M_2 / (2M))``; the additive ``o(1)`` in the
    exponent is dropped. See :func:`expected_trials_valid` for the regime
    where the estimate is meaningful.
    """
    return math.exp(log_expected_trials(inst))


def log_expected_trials(inst: HypergraphInstance) -> float:
    return (inst.k - 1) * inst.M_2 / (2 * inst.M)


def expected_trials_valid(inst: HypergraphInstance) -> bool:
    """Concrete stand-in for ``k^4 d_max^3 = o(M)``: ``k^4 d_max^3 <= M/10``."""
    return 10 * inst.k**4 * inst.d_max**3 <= inst.M


def default_max_trials(inst: HypergraphInstance) -> int:
    return math.ceil(100 * expected_trials_estimate(inst))


def config_sample_hypergraph(
    inst: HypergraphInstance, rng, max_trials: int | None = None
) -> tuple[Hypergraph, int]:
    """Sample a uniform simple hypergraph; return it with the trial count.

    Raises :class:`Exhausted` after ``max_trials`` non-simple configurations
    (default ``ceil(100 * expected_trials_estimate(inst))``).
    """
    rng = as_generator(rng)
    if max_trials is None:
        max_trials = default_max_trials(inst)
    cells = point_cells(inst.d)
    for trial in range(1, max_trials + 1):
        conf = Configuration(rng.permutation(inst.M).reshape(inst.m, inst.k), cells)
        h = project(conf, inst.n)
        if isinstance(h, Hypergraph):
            return h, trial
    raise Exhausted(f"no simple configuration in {max_trials} trials", max_trials)


def sample_bipartite(bds: BipartiteDegreeSequence, rng, max_trials: int = 10**6) -> BipartiteGraph:
    """Exactly uniform element of B(d, kvec) via the bipartite configuration model.

    Parts are labelled by right node, so only loops (a cell hit twice by
    one part) are rejected. Every simple bipartite graph corresponds to
    ``prod d_i! prod k_j!`` labelled pairings, hence uniformity.
    """
    rng = as_generator(rng)
    cells = point_cells(bds.d)
    bounds = np.concatenate([[0], np.cumsum(bds.kvec)])
    for _ in range(max_trials):
        perm = cells[rng.permutation(bds.M)]
        rows = []
        for j in range(bds.m):
            row = np.sort(perm[bounds[j]:bounds[j + 1]])
            if row.size > 1 and (row[1:] == row[:-1]).any():
                break
            rows.append(tuple(row.tolist()))
        else:
            return BipartiteGraph(bds.n, tuple(rows))
    raise Exhausted(f"no loop-free pairing in {max_trials} trials", max_trials)

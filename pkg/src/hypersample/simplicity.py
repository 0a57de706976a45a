"""The map from bipartite graphs to hypergraphs, and the H-simplicity test.

A half-regular bipartite graph ``B`` is H-simple when its right nodes have
pairwise distinct neighborhoods; ``phi(B)`` is then the simple hypergraph
whose edges are those neighborhoods. Distinctness is decided by sorting
the ``m`` neighborhoods and comparing neighbors in sorted order, which
costs O(M log M) and leaves the canonical edge list behind as a by-product.
"""

from __future__ import annotations

from dataclasses import dataclass

from hypersample.core import BipartiteGraph, Hypergraph


@dataclass(frozen=True)
class NotHSimple:
    """Two right nodes ``s < t`` share the neighborhood ``edge``.

    The pair reported is the first collision met when scanning the sorted
    neighborhoods, with ties broken by right-node index.
    """

    s: int
    t: int
    edge: tuple[int, ...]

    def __bool__(self):
        return False


def _sorted_order(b: BipartiteGraph) -> list[int]:
    return sorted(range(b.m), key=lambda j: (b.nbrs[j], j))


def phi(b: BipartiteGraph) -> Hypergraph | NotHSimple:
    """Return the hypergraph of ``b`` or a :class:`NotHSimple` witness."""
    order = _sorted_order(b)
    nbrs = b.nbrs
    for a, c in zip(order, order[1:]):
        if nbrs[a] == nbrs[c]:
            return NotHSimple(a, c, nbrs[a])
    # already canonical, skip re-sorting in canonicalize()
    return Hypergraph(b.n, tuple(nbrs[j] for j in order))


def is_h_simple(b: BipartiteGraph) -> bool:
    return isinstance(phi(b), Hypergraph)

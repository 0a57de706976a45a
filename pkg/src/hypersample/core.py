"""Problem instances and value types.

Node indices are 0-based everywhere inside the library. The text/JSON
readers and writers in :mod:`hypersample.io` convert to and from the
1-based ids used in files and on the command line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from hypersample.errors import (
    DegreeExceedsEdges,
    DegreeSumMismatch,
    DuplicateEdge,
    EdgeSizeTooSmall,
    IndivisibleTotal,
    InvalidHypergraph,
    InvalidInstance,
    RepeatedNodeInEdge,
    WrongEdgeSize,
    ZeroDegree,
)

UINT64_MAX = 2**64 - 1


def falling_factorial(a: int, r: int) -> int:
    out = 1
    for i in range(r):
        out *= a - i
    return out


@dataclass(frozen=True)
class HypergraphInstance:
    """A degree sequence ``d`` together with a uniform edge size ``k``.

    Construction validates the instance; use :func:`validate_instance` when
    starting from arbitrary iterables.
    """

    d: tuple[int, ...]
    k: int

    def __post_init__(self):
        d = tuple(int(x) for x in self.d)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "k", int(self.k))
        if not d:
            raise InvalidInstance("degree sequence is empty")
        if self.k < 2:
            raise EdgeSizeTooSmall(f"edge size k={self.k} < 2")
        if min(d) < 1:
            raise ZeroDegree(f"degree sequence has entries < 1: {d}")
        if self.M % self.k:
            raise IndivisibleTotal(f"k={self.k} does not divide M={self.M}")
        if self.d_max > self.m:
            raise DegreeExceedsEdges(
                f"d_max={self.d_max} exceeds the number of edges m={self.m}"
            )

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def M(self) -> int:
        return sum(self.d)

    @property
    def m(self) -> int:
        return self.M // self.k

    @property
    def d_max(self) -> int:
        return max(self.d)

    @property
    def M_2(self) -> int:
        return sum(x * (x - 1) for x in self.d)

    @property
    def L_2(self) -> int:
        # right side is k-regular: sum over m nodes of k(k-1)
        return (self.k - 1) * self.M

    @property
    def is_regular(self) -> bool:
        return len(set(self.d)) == 1

    @property
    def in_theorem_range(self) -> bool:
        """False for k < 3, where the simplicity bounds do not apply."""
        return self.k >= 3

    def bipartite(self) -> "BipartiteDegreeSequence":
        return BipartiteDegreeSequence(self.d, (self.k,) * self.m)


def validate_instance(d: Iterable[int], k: int) -> HypergraphInstance:
    return HypergraphInstance(tuple(d), k)


@dataclass(frozen=True)
class BipartiteDegreeSequence:
    """Left degrees ``d`` and right degrees ``kvec``; zeros are allowed."""

    d: tuple[int, ...]
    kvec: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.d)
        kvec = tuple(int(x) for x in self.kvec)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "kvec", kvec)
        if min(d, default=0) < 0 or min(kvec, default=0) < 0:
            raise InvalidInstance("degrees must be nonnegative")
        if sum(d) != sum(kvec):
            raise DegreeSumMismatch(
                f"left degrees sum to {sum(d)} but right degrees sum to {sum(kvec)}"
            )

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def m(self) -> int:
        return len(self.kvec)

    @property
    def M(self) -> int:
        return sum(self.d)

    @property
    def L(self) -> int:
        return sum(self.kvec)

    @property
    def d_max(self) -> int:
        return max(self.d, default=0)

    @property
    def k_max(self) -> int:
        return max(self.kvec, default=0)

    def M_r(self, r: int) -> int:
        return sum(falling_factorial(x, r) for x in self.d)

    def L_r(self, r: int) -> int:
        return sum(falling_factorial(x, r) for x in self.kvec)

    @property
    def is_half_regular(self) -> bool:
        return len(set(self.kvec)) <= 1


@dataclass(frozen=True)
class BipartiteGraph:
    """Biadjacency structure stored as right-node neighborhoods.

    ``nbrs[j]`` is the strictly increasing tuple of left nodes adjacent to
    right node ``j``.
    """

    n: int
    nbrs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        nbrs = tuple(tuple(int(x) for x in row) for row in self.nbrs)
        object.__setattr__(self, "nbrs", nbrs)
        for j, row in enumerate(nbrs):
            for a, b in zip(row, row[1:]):
                if a >= b:
                    raise InvalidHypergraph(
                        f"neighborhood of right node {j} is not strictly increasing: {row}"
                    )
            if row and (row[0] < 0 or row[-1] >= self.n):
                raise InvalidHypergraph(f"neighborhood of right node {j} out of range")

    @property
    def m(self) -> int:
        return len(self.nbrs)

    def left_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for row in self.nbrs:
            for x in row:
                deg[x] += 1
        return tuple(deg)

    def right_degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.nbrs)

    def degree_sequence(self) -> BipartiteDegreeSequence:
        return BipartiteDegreeSequence(self.left_degrees(), self.right_degrees())

    def edges(self) -> list[tuple[int, int]]:
        """Incidences as ``(left, right)`` pairs."""
        return [(x, j) for j, row in enumerate(self.nbrs) for x in row]

    def biadjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.m), dtype=np.int8)
        for j, row in enumerate(self.nbrs):
            a[list(row), j] = 1
        return a

    def encode(self) -> str:
        """1-based ids, neighborhoods separated by ``|``."""
        return "|".join(" ".join(str(x + 1) for x in row) for row in self.nbrs)


@dataclass(frozen=True)
class Hypergraph:
    """A simple uniform hypergraph in canonical form.

    Edges are strictly increasing tuples and the edge list is sorted, so
    equal hypergraphs compare (and hash) equal.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        edges = tuple(tuple(int(x) for x in e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if any(a >= b for a, b in zip(e, e[1:])):
                raise InvalidHypergraph(f"edge {e} is not strictly increasing")
            if e and (e[0] < 0 or e[-1] >= self.n):
                raise InvalidHypergraph(f"edge {e} has nodes outside [0, {self.n})")
        if any(a >= b for a, b in zip(edges, edges[1:])):
            raise InvalidHypergraph("edge list is not strictly sorted")
        if len({len(e) for e in edges}) > 1:
            raise WrongEdgeSize("edges have different sizes")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def k(self) -> int | None:
        return len(self.edges[0]) if self.edges else None

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            for x in e:
                deg[x] += 1
        return tuple(deg)

    def encode(self) -> str:
        """One edge per line, 1-based ids."""
        return "\n".join(" ".join(str(x + 1) for x in e) for e in self.edges)


def canonicalize(
    edges: Iterable[Sequence[int]], n: int | None = None, k: int | None = None
) -> Hypergraph:
    """Sort nodes within each edge and edges lexicographically.

    Duplicate edges raise :class:`DuplicateEdge` rather than being merged.
    """
    rows = [tuple(sorted(int(x) for x in e)) for e in edges]
    if k is None and rows:
        k = len(rows[0])
    for e in rows:
        if len(e) != k:
            raise WrongEdgeSize(f"edge {e} has size {len(e)}, expected {k}")
        if any(a == b for a, b in zip(e, e[1:])):
            raise RepeatedNodeInEdge(f"edge {e} repeats a node")
    rows.sort()
    for a, b in zip(rows, rows[1:]):
        if a == b:
            raise DuplicateEdge(f"edge {a} appears more than once")
    if n is None:
        n = max((e[-1] for e in rows if e), default=-1) + 1
    return Hypergraph(n, tuple(rows))


@dataclass(frozen=True)
class RngSeed:
    """Seed plus stream index; each pair yields an independent generator."""

    seed: int
    stream: int = 0

    def __post_init__(self):
        for name in ("seed", "stream"):
            v = getattr(self, name)
            if not 0 <= v <= UINT64_MAX:
                raise ValueError(f"{name}={v} is not a 64-bit unsigned integer")

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream,))
        return np.random.Generator(np.random.PCG64(ss))

    def spawn(self, stream: int) -> "RngSeed":
        return RngSeed(self.seed, stream)


def as_generator(rng) -> np.random.Generator:
    """Accept a Generator, an :class:`RngSeed`, an int seed or None."""
    if isinstance(rng, np.random.Generator):
        return rng
    if isinstance(rng, RngSeed):
        return rng.generator()
    return np.random.default_rng(rng)

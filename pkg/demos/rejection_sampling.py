"""Uniform hypergraphs by rejection over bipartite graphs.

A hypergraph with degrees d and edge size k is the same thing as a
bipartite graph whose right nodes all have distinct neighborhoods (up to
relabelling the right nodes). So draw bipartite graphs uniformly and keep
the first one whose right neighborhoods are pairwise distinct.

Run with ``python3 demos/rejection_sampling.py``.
"""

from collections import Counter

from hypersample import HypergraphInstance, RngSeed, oracle
from hypersample.rejection import config_handle, hypergraph_sampling

inst = HypergraphInstance((3, 3, 3, 1, 1, 1), 3)
exact = oracle.enumerate_bipartite(inst)
print(f"instance d={inst.d} k={inst.k}: {exact.summary()}")
print(f"so about {float(1 / exact.p_simple):.3f} bipartite draws per hypergraph\n")

# the bipartite configuration model is an exactly uniform sampler for B(d, k)
handle = config_handle(inst)
rng = RngSeed(2024).generator()

hist = Counter()
iterations = []
for _ in range(20_000):
    h, stats = hypergraph_sampling(inst, handle, rng)
    hist[h.encode()] += 1
    iterations.append(stats.iterations)

print(f"mean iterations {sum(iterations) / len(iterations):.3f}")
print(f"{len(hist)} distinct hypergraphs seen (oracle says {exact.count_H}):")
for enc, c in sorted(hist.items()):
    print(f"  {c:5d}  {enc.replace(chr(10), ' / ')}")

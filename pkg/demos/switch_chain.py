"""The switch chain as the bipartite sampler.

A switch picks two incidences (x1, y1), (x2, y2) and swaps them to
(x1, y2), (x2, y1) when that keeps the graph simple. Degrees never change.
On a tiny instance we can compare the chain's output law with the uniform
law over every bipartite graph, and watch it converge as steps grow.
"""

from collections import Counter

from hypersample import HypergraphInstance, RngSeed, oracle
from hypersample.stats import tv_distance, uniform
from hypersample.switch_chain import initial_graph, switch_sample

inst = HypergraphInstance((2, 2, 2, 1, 1, 1), 3)
states = oracle.enumerate_states(inst)
print(f"|B(d, k)| = {len(states)}; start state {initial_graph(inst.bipartite()).encode()}")

rng = RngSeed(3).generator()
runs = 20_000
for steps in (0, 1, 3, 10, 30, 100):
    hist = Counter(switch_sample(inst, steps, rng).encode() for _ in range(runs))
    print(f"{steps:4d} steps: TV from uniform {tv_distance(hist, uniform(states)):.4f}")
print(f"(sampling noise alone is about {0.5 * (len(states) / runs) ** 0.5:.3f})")

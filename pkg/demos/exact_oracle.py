"""Exact counting on tiny instances.

The oracle counts bipartite graphs, H-simple ones and hypergraphs
exactly, which lets us check the simplicity lower bound and the
degree-balancing property without any sampling.
"""

from hypersample import BipartiteDegreeSequence, HypergraphInstance, oracle
from hypersample.bounds import regular_simplicity_bound_exact

print("regular instances, k = 3: exact P(H-simple) against the lower bound")
for n, d in [(6, 1), (6, 2), (6, 3), (7, 3), (8, 3)]:
    r = oracle.enumerate_bipartite(HypergraphInstance((d,) * n, 3))
    bound = regular_simplicity_bound_exact(n, d, 3)
    print(f"  n={n} d={d}: |B|={r.count_B:>12d} p={float(r.p_simple):.4f} "
          f"bound={float(bound):.4f}")

print("\nmoving one unit of degree from a high node to a low one never lowers |B|:")
for d in [(3, 1, 1, 1), (3, 3, 2, 1), (4, 2, 2, 2, 2), (4, 3, 2, 2, 1, 0)]:
    kvec = (3,) * (sum(d) // 3)
    g, h = d.index(max(d)), d.index(min(d))
    chk = oracle.verify_proposition_balanced(BipartiteDegreeSequence(d, kvec), g, h)
    print(f"  d={d} -> {oracle.balanced(d, g, h)}: {chk.count_before} -> {chk.count_after}")

c = oracle.exact_constants(HypergraphInstance((2, 2, 2, 1, 1, 1), 3))
print(f"\ncollision constants for (2,2,2,1,1,1): c1={c.c1} c2={c.c2}")

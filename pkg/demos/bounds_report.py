"""Closed-form bounds for a few instances.

Lower bounds on the probability that a uniform bipartite graph is
H-simple, the runtime factor and failure cap of the capped sampler, and
the mixing budget of the switch chain. Asymptotic formulas carry a
validity flag.
"""

from hypersample import HypergraphInstance, oracle
from hypersample.bounds import bounds_report

for d, k in [((1,) * 6, 3), ((2, 2, 2, 1, 1, 1), 3), ((2,) * 30, 3), ((3,) * 40 + (1,) * 20, 4)]:
    inst = HypergraphInstance(d, k)
    rep = bounds_report(inst)
    print(f"n={inst.n} M={inst.M} k={k} d_max={inst.d_max}")
    if rep.regular_simplicity_lower_bound is not None:
        print(f"  regular bound          {rep.regular_simplicity_lower_bound:.4f}")
    print(f"  irregular bound        {rep.irregular_simplicity_lower_bound:.4f}"
          f" (proxy {'holds' if rep.irregular_bound_valid else 'fails'})")
    if inst.M <= 12:
        print(f"  exact probability      {float(oracle.enumerate_bipartite(inst).p_simple):.4f}")
    print(f"  implied c0             {rep.implied_c0:.4g}; fpaus cap {rep.fpaus_cap}")
    print(f"  switch mixing budget   e^{rep.mixing_budget_irregular:.1f} steps\n")

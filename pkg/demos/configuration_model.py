"""The configuration model and its expected number of trials.

Each node i gets d_i points; a uniform permutation of all points cut into
blocks of k gives a random configuration. Projecting points to nodes gives
a hypergraph that may have loops or repeated edges, in which case the
whole configuration is thrown away.
"""

import numpy as np

from hypersample import HypergraphInstance, RngSeed
from hypersample.config_model import (
    config_sample_hypergraph,
    expected_trials_estimate,
    expected_trials_valid,
    project,
    random_configuration,
)

rng = RngSeed(5).generator()

inst = HypergraphInstance((2,) * 12, 3)
conf = random_configuration(inst, rng)
print("one configuration (node of each point, per part):")
print(conf.cells())
print("projects to:", project(conf, inst.n), "\n")

for d in [(2,) * 12, (2,) * 60, (3,) * 12, (1,) * 30]:
    inst = HypergraphInstance(d, 3)
    trials = [config_sample_hypergraph(inst, rng)[1] for _ in range(5000)]
    est = expected_trials_estimate(inst)
    flag = "in range" if expected_trials_valid(inst) else "outside the asymptotic range"
    print(f"n={inst.n:3d} d_max={inst.d_max}: mean trials {np.mean(trials):6.3f}, "
          f"leading-order estimate {est:6.3f} ({flag})")

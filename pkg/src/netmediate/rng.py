"""Splittable random streams keyed by (master seed, replication, stream tag).

Every stochastic component draws from its own stream so that replications
are reproducible independently of execution order (serial or parallel).
"""

import numpy as np

# stream tags
LATENTS = 0
DISTURBANCES = 1
TREATMENTS = 2
NOISE = 3
ORACLE = 4
DIAGNOSTIC = 5


def stream(master_seed: int, *key: int) -> np.random.Generator:
    """Return an independent generator for the given (seed, key...) address."""
    ss = np.random.SeedSequence(master_seed, spawn_key=tuple(key))
    return np.random.default_rng(ss)

"""
Checking optimality against brute force
=======================================

Draws random small inputs (seeded by NECKTIG_SEED) and compares the
matching-based pipeline with exhaustive search, the greedy DFS baseline
and Eulertigs.
"""

import random

import numpy as np

from necktig import (
    NodeGraph,
    brute_min_necklace_cost,
    cost_report,
    eulertigs,
    extract_spectrum,
    greedy_baseline_cover,
    matching_pc_cover,
    necklace_cover,
)
from necktig.verify import random_instance, seed_from_env

rng = random.Random(seed_from_env(0))
gaps = []
for _ in range(200):
    strings, k = random_instance(rng, max_nodes=10)
    spec = extract_spectrum(strings, k)
    g = NodeGraph(spec)
    best = cost_report(necklace_cover(g, matching_pc_cover(g)), k).cost_dollar
    assert best == brute_min_necklace_cost(g, k)
    greedy = cost_report(greedy_baseline_cover(g), k).cost_dollar
    gaps.append((greedy - best, eulertigs(spec).weight + 1 - best))

gaps = np.array(gaps)
print("greedy baseline excess: mean %.2f, max %d" % (gaps[:, 0].mean(), gaps[:, 0].max()))
print("eulertigs excess:       mean %.2f, max %d" % (gaps[:, 1].mean(), gaps[:, 1].max()))

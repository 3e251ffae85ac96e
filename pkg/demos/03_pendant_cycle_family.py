"""
Where necklaces beat every SPSS
===============================

A de Bruijn cycle with one extra k-mer hanging off each node needs one
SPSS string per hanging k-mer, but only four symbols per k-mer as a
necklace. The ratio approaches 4/(k+1).
"""

import numpy as np

from necktig import NodeGraph, encode_cover, eulertigs, extract_spectrum, gen_family, matching_pc_cover, necklace_cover

rows = []
for k in range(4, 9):
    seqs = gen_family(k)
    spec = extract_spectrum(seqs, k)
    g = NodeGraph(spec)
    enc = encode_cover(necklace_cover(g, matching_pc_cover(g)), spec)
    rows.append((k, len(spec), enc.sigma_paren_count, eulertigs(spec).weight))

table = np.array(rows)
ratio = table[:, 2] / table[:, 3]
for (k, n_k, ours, eul), r in zip(rows, ratio):
    print(f"k={k} N_k={n_k:6d} necklace={ours:6d} eulertigs={eul:6d} ratio={r:.4f} 4/(k+1)={4 / (k + 1):.4f}")

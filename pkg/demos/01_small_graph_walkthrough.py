"""
From strings to necklaces on a 21-node graph
============================================

Builds both de Bruijn graphs for a small branching input, compares the
Eulertigs SPSS with the necklace encoding, and decodes the result back.
"""

from necktig import (
    EdgeGraph,
    NodeGraph,
    check_spss,
    cost_report,
    decode_cover,
    encode_cover,
    eulertigs,
    extract_spectrum,
    matching_pc_cover,
    necklace_cover,
)

# four branching records plus CAA, k = 3
strings = ["TGGACGGGACGGCAT", "CAGTTCC", "CGGTCGTT", "GGCAGCT", "CAA"]
spec = extract_spectrum(strings, 3)
print("distinct 3-mers:", len(spec))

g = NodeGraph(spec)
print(g, EdgeGraph(spec))

# minimum SPSS: cut an Eulerian tour at its breaking edges
tigs = eulertigs(spec)
print("eulertigs:", tigs.strings, "weight", tigs.weight)
print("exact:", check_spss(tigs.strings, 3, spec).ok)

# necklace cover from a maximum matching
cover = matching_pc_cover(g)
print("PC cover:", cover.n_paths, "paths,", cover.n_cycles, "cycles")
nc = necklace_cover(g, cover)
for mode in ("dollar", "separator"):
    enc = encode_cover(nc, spec, mode)
    print(f"{mode:9s}", repr(enc.payload), enc.symbol_count, "symbols")
    assert decode_cover(enc) == spec

print(cost_report(nc, 3).as_dict())

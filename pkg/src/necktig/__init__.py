"""Compact k-mer set representations with necklace covers of the de Bruijn graph."""

__version__ = "0.1.0"

from .baseline import greedy_baseline_cover
from .debruijn import EdgeGraph, NodeGraph, build_edge_dbg, build_node_dbg
from .encoding import (
    CostReport,
    Encoded,
    cost_report,
    decode_cover,
    decode_necklace,
    encode_cover,
    encode_necklace,
    kmer_at,
)
from .errors import NecktigError
from .eulertigs import EulertigsResult, eulertigs
from .family import FamilySpec, de_bruijn_sequence, family_spec, gen_family
from .kmers import SeqSet, Spectrum, extract_spectrum, parse_fasta, read_fasta
from .necklace import Necklace, NecklaceCover, find_new_cycle, necklace_cover
from .pc_cover import PCCover, brute_min_paths, eulertigs_pc_cover, greedy_pc_cover, matching_pc_cover
from .verify import brute_min_necklace_cost, check_necklace_cover, check_spss

__all__ = [
    "CostReport",
    "EdgeGraph",
    "Encoded",
    "EulertigsResult",
    "FamilySpec",
    "Necklace",
    "NecklaceCover",
    "NecktigError",
    "NodeGraph",
    "PCCover",
    "SeqSet",
    "Spectrum",
    "brute_min_necklace_cost",
    "brute_min_paths",
    "build_edge_dbg",
    "build_node_dbg",
    "check_necklace_cover",
    "check_spss",
    "cost_report",
    "de_bruijn_sequence",
    "decode_cover",
    "decode_necklace",
    "encode_cover",
    "encode_necklace",
    "eulertigs",
    "eulertigs_pc_cover",
    "extract_spectrum",
    "family_spec",
    "find_new_cycle",
    "gen_family",
    "greedy_baseline_cover",
    "greedy_pc_cover",
    "kmer_at",
    "matching_pc_cover",
    "necklace_cover",
    "parse_fasta",
    "read_fasta",
]

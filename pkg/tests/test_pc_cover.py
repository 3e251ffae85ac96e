import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from cases import BRANCHING_INPUT, dna, graph_of
from necktig.errors import OracleSizeError, PreconditionError
from necktig.pc_cover import (
    PCCover,
    brute_min_paths,
    check_pc_cover,
    classify_paths,
    close_obvious_cycles,
    decompose,
    eulertigs_pc_cover,
    greedy_pc_cover,
    hopcroft_karp,
    matching_pc_cover,
    require_valid_cover,
)
from necktig.verify import random_instance

small_inputs = st.tuples(st.lists(st.text(alphabet="ACGT", min_size=5, max_size=14), min_size=1, max_size=3), st.integers(2, 5))


@given(st.integers(1, 12), st.integers(1, 12), st.data())
def test_hopcroft_karp_size_matches_scipy(n_left, n_right, data):
    adj = [sorted(data.draw(st.sets(st.integers(0, n_right - 1), max_size=4))) for _ in range(n_left)]
    match_l, match_r = hopcroft_karp(adj, n_right)
    size = sum(v != -1 for v in match_l)
    for u, v in enumerate(match_l):
        if v != -1:
            assert v in adj[u] and match_r[v] == u
    rows = [u for u, a in enumerate(adj) for _ in a]
    cols = [v for a in adj for v in a]
    m = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n_left, n_right))
    ref = maximum_bipartite_matching(m, perm_type="column")
    assert size == int((ref != -1).sum())


def test_decompose_orders_paths_and_cycles():
    # 0->1, 2 alone, 3->4->3
    cover = decompose([1, -1, -1, 4, 3], [-1, 0, -1, 4, 3])
    assert cover.paths == [[0, 1], [2]]
    assert cover.cycles == [[3, 4]]


def test_branching_matching_cover():
    g = graph_of(BRANCHING_INPUT, 3)
    cover = matching_pc_cover(g)
    assert check_pc_cover(cover, g) == []
    st_ = cover.stats
    assert st_.matching_size + st_.open_paths == g.n
    assert cover.n_paths == st_.open_paths
    assert sum(st_.type_counts.values()) == g.n


@settings(max_examples=80)
@given(small_inputs)
def test_matching_cover_has_fewest_paths(inp):
    strings, k = inp
    g = graph_of(strings, k)
    if g.n > 12:
        return
    cover = matching_pc_cover(g)
    assert check_pc_cover(cover, g) == []
    assert cover.n_paths == brute_min_paths(g)


@given(small_inputs)
def test_matching_paths_never_closable(inp):
    g = graph_of(*inp)
    cover = matching_pc_cover(g)
    assert check_pc_cover(cover, g, require_unclosable=True) == []


@given(small_inputs)
def test_other_covers_valid_and_not_better(inp):
    g = graph_of(*inp)
    best = matching_pc_cover(g).n_paths
    for cover in (greedy_pc_cover(g), eulertigs_pc_cover(g)):
        assert check_pc_cover(cover, g, require_unclosable=True) == []
        assert cover.n_paths >= best


def test_close_obvious_cycles():
    g = graph_of(["ATCAAT"], 3)  # ATC TCA CAA AAT form a 4-cycle
    ids = [g.spectrum.id_of(x) for x in ["ATC", "TCA", "CAA", "AAT"]]
    closed = close_obvious_cycles(PCCover([ids], []), g)
    assert closed.paths == [] and closed.cycles == [ids]


def test_require_valid_cover_rejects_overlap():
    g = graph_of(["ACGT"], 3)
    with pytest.raises(PreconditionError):
        require_valid_cover(PCCover([[0, 1], [1]], []), g)
    assert any("covered" in p for p in check_pc_cover(PCCover([[0]], []), g))


def test_classify_paths():
    g = graph_of(["ACGT", "TCG"], 3)  # ACG, CGT, TCG; TCG -> CGT
    cover = PCCover([[g.spectrum.id_of("ACG")], [g.spectrum.id_of("TCG"), g.spectrum.id_of("CGT")]], [])
    prim, non = classify_paths(cover, g)
    assert prim == cover.paths and non == []


def test_brute_size_guard():
    g = graph_of(["ACGTACCAGTTAGGATCAAGC"], 3)
    assert g.n > 12
    with pytest.raises(OracleSizeError):
        brute_min_paths(g)


def test_seeded_random_instances_are_reproducible():
    a = [random_instance(random.Random(7), max_nodes=12) for _ in range(3)]
    b = [random_instance(random.Random(7), max_nodes=12) for _ in range(3)]
    assert a == b

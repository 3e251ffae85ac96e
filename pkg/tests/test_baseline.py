from hypothesis import given, settings, strategies as st

from cases import BRANCHING_INPUT, graph_of
from necktig.baseline import greedy_baseline_cover
from necktig.encoding import cost_report
from necktig.necklace import necklace_cover
from necktig.pc_cover import matching_pc_cover
from necktig.verify import check_necklace_cover

inputs = st.tuples(
    st.lists(st.text(alphabet="ACGT", min_size=8, max_size=60), min_size=1, max_size=3),
    st.sampled_from([3, 4, 5, 7]),
)


def test_chain():
    g = graph_of(["ACGTTA"], 3)
    nc = greedy_baseline_cover(g)
    assert len(nc.necklaces) == 1
    assert nc.n_open == 1 and nc.n_leaves == 0


def test_cycle_gets_closed():
    g = graph_of(["ATCAATC"], 3)
    nc = greedy_baseline_cover(g)
    assert nc.n_closed == 1 and nc.n_open == 0 and nc.n_leaves == 0


def test_branching_graph_not_better_than_pipeline():
    g = graph_of(BRANCHING_INPUT, 3)
    base = greedy_baseline_cover(g)
    assert check_necklace_cover(base, g).ok
    best = necklace_cover(g, matching_pc_cover(g))
    assert cost_report(base, 3).cost_dollar >= cost_report(best, 3).cost_dollar


@settings(max_examples=100)
@given(inputs)
def test_valid_and_dominated(inp):
    g = graph_of(*inp)
    base = greedy_baseline_cover(g)
    assert check_necklace_cover(base, g).ok
    best = necklace_cover(g, matching_pc_cover(g))
    assert cost_report(best, g.k).cost_dollar <= cost_report(base, g.k).cost_dollar

import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from rainbowsat import (
    Graph,
    SearchAborted,
    Status,
    Verdict,
    are_isomorphic,
    complete_graph,
    cycle,
    disjoint_union,
    empty_graph,
    enumerate_nonisomorphic_graphs,
    find_rainbow_embedding,
    graph6_decode,
    greedy_saturate,
    is_classically_saturated,
    is_proper,
    is_rainbow_saturated,
    join,
    path,
    rainbow_free_colorable,
    sat_exact,
    sat_formula_oracle,
    sat_star_exact,
    star,
    structural_report,
    wheel,
)
from rainbowsat.constructions import ehm_graph
from rainbowsat.oracle import brute_embeddings, brute_isomorphic, naive_rainbow_free_colorable
from rainbowsat.saturation import enumerate_levels

from .strategies import graphs


def naive_is_rainbow_saturated(g, pats):
    """Oracle saturation check built only on the naive partition oracle."""
    if not naive_rainbow_free_colorable(g, pats):
        return False
    return all(
        not naive_rainbow_free_colorable(g.with_edge(u, v), pats) for u, v in g.non_edges()
    )


# -- saturation verdicts --------------------------------------------------------


def test_wheel_is_rainbow_c4_saturated():
    v = is_rainbow_saturated(wheel(8), [cycle(4)])
    assert v.status is Verdict.SATURATED
    assert is_proper(wheel(8), v.witness_coloring)


def test_small_star_not_p4_saturated():
    v = is_rainbow_saturated(star(3), [path(4)])
    assert v.status is Verdict.NOT_SATURATED
    assert v.failing_edge is not None
    g2 = star(3).with_edge(*v.failing_edge)
    assert is_proper(g2, v.failing_coloring)
    assert find_rainbow_embedding(g2, v.failing_coloring, path(4)) is None


def test_four_k4s_are_p4_saturated():
    g = disjoint_union([complete_graph(4)] * 4)
    v = is_rainbow_saturated(g, [path(4)])
    assert v.status is Verdict.SATURATED


def test_edgeless_pair_is_k2_saturated():
    assert is_rainbow_saturated(empty_graph(2), [complete_graph(2)]).status is Verdict.SATURATED
    assert is_rainbow_saturated(path(2), [complete_graph(2)]).status is Verdict.NOT_SATURATED


def test_failing_coloring_merges_across_components():
    g = disjoint_union([complete_graph(4), star(3)])
    v = is_rainbow_saturated(g, [path(4)])
    assert v.status is Verdict.NOT_SATURATED
    g2 = g.with_edge(*v.failing_edge)
    assert is_proper(g2, v.failing_coloring)
    assert find_rainbow_embedding(g2, v.failing_coloring, path(4)) is None


def test_saturated_verdicts_match_naive_oracle():
    # independent re-verification on hosts with few edges
    pats = [path(4)]
    for m, level in enumerate_levels(5, 5):
        for g in level:
            fast = is_rainbow_saturated(g, pats).status is Verdict.SATURATED
            assert fast == naive_is_rainbow_saturated(g, pats)


# -- classical saturation ---------------------------------------------------------


def test_classical_examples():
    assert is_classically_saturated(join(complete_graph(2), empty_graph(4)), complete_graph(4))
    assert not is_classically_saturated(complete_graph(3), complete_graph(3))
    assert is_classically_saturated(cycle(5), complete_graph(3))


def test_classical_matches_brute_force():
    rng = random.Random(17)
    h = complete_graph(3)
    for _ in range(40):
        n = rng.randint(3, 6)
        pairs = list(combinations(range(n), 2))
        g = Graph(n, rng.sample(pairs, rng.randint(0, len(pairs))))
        free = not brute_embeddings(g, h)
        forced = all(brute_embeddings(g.with_edge(u, v), h) for u, v in g.non_edges())
        assert is_classically_saturated(g, h) == (free and forced)


# -- enumeration -------------------------------------------------------------------


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_nonisomorphic_graphs(3)) == 4
    assert sum(1 for _ in enumerate_nonisomorphic_graphs(4)) == 11
    assert sum(1 for _ in enumerate_nonisomorphic_graphs(5)) == 34


def test_enumeration_is_ascending_and_duplicate_free():
    graphs_seen = list(enumerate_nonisomorphic_graphs(5))
    counts = [g.edge_count for g in graphs_seen]
    assert counts == sorted(counts)
    for i, g in enumerate(graphs_seen):
        for h in graphs_seen[i + 1 :]:
            if g.edge_count == h.edge_count:
                assert not brute_isomorphic(g, h)


def test_enumeration_complete_against_brute_force():
    pairs = list(combinations(range(4), 2))
    reps = []
    for bits in range(64):
        g = Graph(4, [p for i, p in enumerate(pairs) if bits >> i & 1])
        if not any(brute_isomorphic(g, h) for h in reps):
            reps.append(g)
    enumerated = list(enumerate_nonisomorphic_graphs(4))
    assert len(enumerated) == len(reps)
    for g in reps:
        assert any(brute_isomorphic(g, h) for h in enumerated)


def test_enumeration_budget_and_range():
    assert all(g.edge_count <= 2 for g in enumerate_nonisomorphic_graphs(5, 2))
    with pytest.raises(ValueError):
        list(enumerate_nonisomorphic_graphs(11))


# -- exact numbers -------------------------------------------------------------------


def test_sat_exact_examples():
    assert sat_exact(5, complete_graph(3)).value == 4
    assert sat_exact(6, path(4)).value == 3
    assert sat_exact(5, cycle(4)).value == 5


def test_sat_star_p3_matches_classical():
    for n in range(3, 8):
        assert sat_star_exact(n, [path(3)]).value == sat_exact(n, path(3)).value


def test_sat_star_p4_cross_checked():
    res = sat_star_exact(5, [path(4)])
    assert res.value == 4
    pats = [path(4)]
    # every witness is saturated per the naive oracle
    for code in res.witnesses:
        assert naive_is_rainbow_saturated(graph6_decode(code), pats)
    # and no graph with fewer edges is
    for m, level in enumerate_levels(5, res.value - 1):
        for g in level:
            assert not naive_is_rainbow_saturated(g, pats)


def test_sat_star_no_saturated_graph_outcome():
    # a single-vertex pattern is rainbow under every coloring of every host,
    # so condition (a) never holds and no saturated graph exists
    res = sat_star_exact(3, [complete_graph(1)])
    assert res.value is None
    assert res.witnesses == ()


def test_sat_star_budget_aborts():
    with pytest.raises(SearchAborted):
        sat_star_exact(6, [cycle(4)], node_limit=2)


def test_sat_star_worker_pool_is_deterministic():
    seq = sat_star_exact(6, [cycle(4)])
    par = sat_star_exact(6, [cycle(4)], threads=3)
    assert seq.value == par.value
    assert seq.witnesses == par.witnesses


# -- downward closure and greedy -------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=2, max_n=6, max_edges=8))
def test_downward_closure(g):
    fam = [complete_graph(3)]
    for u, v in g.non_edges()[:3]:
        if rainbow_free_colorable(g.with_edge(u, v), fam).status is Status.COLORABLE:
            assert rainbow_free_colorable(g, fam).status is Status.COLORABLE


def test_greedy_trace_on_empty_four():
    g = greedy_saturate(empty_graph(4), [complete_graph(3)])
    assert are_isomorphic(g, star(3))
    assert g.edges == ((0, 1), (0, 2), (0, 3))


def test_greedy_fixed_point():
    w = wheel(8)
    assert greedy_saturate(w, [cycle(4)]) == w


def test_greedy_always_saturates():
    rng = random.Random(23)
    fam = [path(4)]
    for n in (4, 5, 6):
        g = greedy_saturate(empty_graph(n), fam)
        assert is_rainbow_saturated(g, fam).status is Verdict.SATURATED
        assert g.edge_count >= sat_star_exact(n, fam).value
        shuffled = greedy_saturate(empty_graph(n), fam, order="random", seed=rng.random())
        assert is_rainbow_saturated(shuffled, fam).status is Verdict.SATURATED


def test_greedy_rejects_uncolorable_seed():
    with pytest.raises(ValueError):
        greedy_saturate(path(3), [path(3)])


# -- formulas and audits ---------------------------------------------------------------


def test_formula_values():
    assert sat_formula_oracle("EHM", 6, 4) == 9
    assert sat_formula_oracle("KT_P4", 7) == 5
    assert sat_formula_oracle("C4", 6) == 6


def test_formula_errors():
    with pytest.raises(ValueError):
        sat_formula_oracle("EHM", 4, 5)
    with pytest.raises(ValueError):
        sat_formula_oracle("EHM", 4)
    with pytest.raises(ValueError):
        sat_formula_oracle("C4", 3)
    with pytest.raises(ValueError):
        sat_formula_oracle("nope", 5)


def test_ehm_uniqueness_small():
    res = sat_exact(6, complete_graph(4))
    assert res.value == sat_formula_oracle("EHM", 6, 4)
    assert len(res.witnesses) == 1
    assert are_isomorphic(graph6_decode(res.witnesses[0]), ehm_graph(6, 4))


def test_structural_report_wheel():
    rep = structural_report(wheel(8), clique_order=4)
    assert rep["min_degree"] == 3
    assert rep["degree_one_vertices"] == []
    assert rep["nonadjacent_low_degree_pairs"] == []

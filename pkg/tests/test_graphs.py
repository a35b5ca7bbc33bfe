import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowsat import (
    Graph,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    complete_graph,
    cycle,
    disjoint_union,
    empty_graph,
    graph6_decode,
    graph6_encode,
    graph_from_json,
    graph_to_json,
    is_even_cycle_free,
    join,
    max_independent_set,
    named_graph,
    path,
    star,
    wheel,
)
from rainbowsat.oracle import brute_isomorphic

from .strategies import graphs


def random_graph(rng, n, m=None):
    pairs = list(combinations(range(n), 2))
    if m is None:
        m = rng.randint(0, len(pairs))
    return Graph(n, rng.sample(pairs, m))


# -- generators ---------------------------------------------------------------


def test_complete_graph_edge_counts():
    assert complete_graph(4).edge_count == 6
    assert complete_graph(1).edge_count == 0
    assert complete_graph(5).edge_count == 10


def test_generator_shapes():
    w = wheel(8)
    assert w.n == 8 and w.edge_count == 14
    assert star(4).edge_count == 4 and star(4).n == 5
    assert path(4).edge_count == 3
    assert cycle(5).edge_count == 5
    assert empty_graph(0).n == 0


def test_generator_range_errors():
    with pytest.raises(ValueError):
        complete_graph(0)
    with pytest.raises(ValueError):
        complete_graph(65)
    with pytest.raises(ValueError):
        wheel(3)
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        path(0)
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 5)])


def test_join_examples():
    g = join(complete_graph(2), empty_graph(4))
    assert g.n == 6 and g.edge_count == 9
    assert are_isomorphic(join(empty_graph(1), empty_graph(1)), complete_graph(2))
    assert are_isomorphic(join(empty_graph(1), cycle(7)), wheel(8))


def test_join_overflow():
    with pytest.raises(ValueError):
        join(empty_graph(40), empty_graph(40))


@settings(max_examples=60)
@given(graphs(max_n=5), graphs(max_n=5))
def test_join_edge_count_formula(g, h):
    assert join(g, h).edge_count == g.edge_count + h.edge_count + g.n * h.n


def test_disjoint_union():
    u = disjoint_union([complete_graph(4)] * 4)
    assert u.n == 16 and u.edge_count == 24
    assert disjoint_union([]).n == 0
    two = disjoint_union([complete_graph(2), complete_graph(2)])
    assert two.n == 4 and two.edge_count == 2


def test_edge_order_is_lexicographic():
    g = Graph(4, [(3, 1), (2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2), (1, 3))


# -- canonical forms ----------------------------------------------------------


def test_canonical_path_reversal():
    p = path(4)
    rev = p.relabel([3, 2, 1, 0])
    assert canonical_form(p).encoding == canonical_form(rev).encoding


def test_canonical_distinguishes_claw_from_cycle():
    assert canonical_form(star(3)).encoding != canonical_form(cycle(4)).encoding


def test_eleven_classes_on_four_vertices():
    # brute-force oracle: pairwise isomorphism over all 2^6 labeled graphs
    pairs = list(combinations(range(4), 2))
    all_graphs = [
        Graph(4, [p for i, p in enumerate(pairs) if bits >> i & 1]) for bits in range(64)
    ]
    reps = []
    for g in all_graphs:
        if not any(brute_isomorphic(g, h) for h in reps):
            reps.append(g)
    assert len(reps) == 11
    assert len({canonical_form(g).encoding for g in all_graphs}) == 11


def test_isomorphism_agrees_with_brute_force_exhaustive_n4():
    pairs = list(combinations(range(4), 2))
    all_graphs = [
        Graph(4, [p for i, p in enumerate(pairs) if bits >> i & 1]) for bits in range(64)
    ]
    for g in all_graphs[::3]:
        for h in all_graphs[::5]:
            assert are_isomorphic(g, h) == brute_isomorphic(g, h)


def test_isomorphism_agrees_with_brute_force_random():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(2, 7)
        g = random_graph(rng, n)
        h = random_graph(rng, n)
        assert are_isomorphic(g, h) == brute_isomorphic(g, h)


@settings(max_examples=80)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_invariant_under_relabeling(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g).encoding == canonical_form(h).encoding
    assert canonical_graph(g) == canonical_graph(h)


def test_canonical_relabeling_realizes_encoding():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 8))
        assert canonical_form(canonical_graph(g)).encoding == canonical_form(g).encoding


# -- independent sets ---------------------------------------------------------


def test_mis_examples():
    assert len(max_independent_set(complete_graph(4))) == 1
    assert len(max_independent_set(empty_graph(6))) == 6
    assert len(max_independent_set(cycle(5))) == 2


@settings(max_examples=80)
@given(graphs(max_n=9))
def test_mis_is_independent_and_maximum(g):
    mis = max_independent_set(g)
    assert all(not g.has_edge(u, v) for u, v in combinations(mis, 2))
    # exhaustive maximality check
    for size in range(len(mis) + 1, g.n + 1):
        for combo in combinations(range(g.n), size):
            assert any(g.has_edge(u, v) for u, v in combinations(combo, 2))


def test_mis_sixteen_vertices():
    rng = random.Random(99)
    g = random_graph(rng, 16, 30)
    mis = max_independent_set(g)
    assert all(not g.has_edge(u, v) for u, v in combinations(mis, 2))
    best = max(
        (mask.bit_count() for mask in range(1 << 16)
         if all(not g.adj[v] & mask for v in range(16) if mask >> v & 1)),
    )
    assert len(mis) == best


@pytest.mark.extended
def test_mis_twenty_vertices_exhaustive():
    rng = random.Random(7)
    g = random_graph(rng, 20, 60)
    mis = max_independent_set(g)
    best = 0
    for mask in range(1 << 20):
        if all(not g.adj[v] & mask for v in range(20) if mask >> v & 1):
            best = max(best, mask.bit_count())
    assert len(mis) == best


# -- graph6 -------------------------------------------------------------------


def test_graph6_reference_values():
    # frozen from the networkx reference implementation
    assert graph6_encode(complete_graph(2)) == "A_"
    assert graph6_encode(empty_graph(5)) == "D??"


def test_graph6_roundtrip_random():
    rng = random.Random(3)
    for _ in range(1000):
        n = rng.randint(0, 12)
        g = random_graph(rng, n)
        assert graph6_decode(graph6_encode(g)) == g


def test_graph6_roundtrip_large_orders():
    rng = random.Random(4)
    for n in (62, 63, 64):
        g = random_graph(rng, n, 200)
        assert graph6_decode(graph6_encode(g)) == g


def test_graph6_matches_networkx():
    rng = random.Random(12)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 20))
        ours = graph6_encode(g)
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from(g.edges)
        theirs = nx.to_graph6_bytes(nxg, header=False).decode().strip()
        assert ours == theirs
        back = graph6_decode(theirs)
        assert back == g


def test_graph6_header_tolerated():
    assert graph6_decode(">>graph6<<A_") == complete_graph(2)


def test_graph6_malformed():
    with pytest.raises(ValueError):
        graph6_decode("")
    with pytest.raises(ValueError):
        graph6_decode("D?")  # truncated body
    with pytest.raises(ValueError):
        graph6_decode("A_X")  # trailing junk
    with pytest.raises(ValueError):
        graph6_decode("~~~~??")  # order beyond 64


def test_json_roundtrip():
    g = wheel(6)
    assert graph_from_json(graph_to_json(g)) == g


# -- even cycles, names -------------------------------------------------------


def test_even_cycle_free():
    assert not is_even_cycle_free(cycle(4))
    assert is_even_cycle_free(complete_graph(4))
    assert not is_even_cycle_free(cycle(6))
    assert is_even_cycle_free(cycle(5))
    assert is_even_cycle_free(path(5))
    # C5 plus a chord has an induced C4
    assert not is_even_cycle_free(cycle(5).with_edge(0, 2))


def test_named_graph():
    assert named_graph("K4") == complete_graph(4)
    assert named_graph("P3") == path(3)
    assert named_graph("C5") == cycle(5)
    assert named_graph("E7") == empty_graph(7)
    assert named_graph("W8") == wheel(8)
    assert named_graph("K1_4") == star(4)
    assert are_isomorphic(named_graph("K2_3"), join(empty_graph(2), empty_graph(3)))
    with pytest.raises(ValueError):
        named_graph("Q3")

from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from brittlegraph.graph import (
    Graph,
    GraphError,
    QuotientSpec,
    complete,
    cycle,
    disjoint_union,
    edgeless,
    join,
    m_copies,
    make_family,
    mask_of,
    path,
    quotient_family,
    random_graph,
    star,
)
from brittlegraph.iso import (
    canonical_form,
    check_embedding,
    find_induced_embedding,
    find_induced_pattern,
    find_subgraph_embedding,
    find_subgraph_pattern,
    is_isomorphic,
    nonisomorphic_graphs,
)

from strategies import graphs, permutations_of


def to_nx(G: Graph) -> nx.Graph:
    X = nx.Graph()
    X.add_nodes_from(range(G.n))
    X.add_edges_from(G.edges())
    return X


# construction and validation ---------------------------------------------------


def test_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_rejects_loops_and_out_of_range():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_vertex_cap():
    Graph.empty(63)
    with pytest.raises(GraphError):
        Graph.empty(64)


# families ----------------------------------------------------------------------


def test_path_edges():
    assert make_family("path", 4).edges() == [(0, 1), (1, 2), (2, 3)]


def test_star_degrees():
    assert make_family("star", 3).degrees() == [3, 1, 1, 1]


def test_empty_is_edgeless():
    G = make_family("empty", 5)
    assert (G.n, G.num_edges()) == (5, 0)


def test_complete_bipartite_sides_are_contiguous():
    G = make_family("complete_bipartite", 2, 3)
    assert G.edges() == [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]


@pytest.mark.parametrize("kind,params", [("path", (-1,)), ("star", (-2,)), ("complete_bipartite", (1, -1))])
def test_negative_parameters_rejected(kind, params):
    with pytest.raises(GraphError):
        make_family(kind, *params)


def test_unknown_family():
    with pytest.raises(GraphError, match="unknown family"):
        make_family("petersen", 10)


# unions and quotients ----------------------------------------------------------


def test_three_copies_of_an_edge():
    G = m_copies(complete(2), 3)
    assert (G.n, G.num_edges(), len(G.components())) == (6, 3, 3)


def test_one_copy_is_the_graph():
    assert m_copies(path(3), 1) == path(3)


def test_zero_copies_rejected():
    with pytest.raises(GraphError):
        m_copies(path(3), 0)


def test_copy_labels_record_copy_and_vertex():
    G = m_copies(path(2), 2)
    assert G.labels == ("0:0", "0:1", "1:0", "1:1")


def test_disjoint_union_counts():
    G = disjoint_union(complete(3), complete(2))
    assert (G.n, G.num_edges()) == (5, 4)


def test_four_paths_glued_at_their_ends():
    # P_4 = abcd with the ends glued over four copies
    G = quotient_family(QuotientSpec(path(4), 4, mask_of([0, 3])))
    assert G.n == 4 * 2 + 2
    assert G.num_edges() == 4 * 3
    assert sorted(G.degrees()) == [2] * 8 + [4, 4]
    assert G.labels[:2] == ("A:0", "A:3")


def test_two_paths_glued_at_ends_is_a_square():
    G = quotient_family(QuotientSpec(path(3), 2, mask_of([0, 2])))
    hand_glued = Graph.from_edges(4, [(0, 2), (2, 1), (0, 3), (3, 1)])
    assert is_isomorphic(G, cycle(4))
    assert is_isomorphic(G, hand_glued)


@pytest.mark.parametrize("A", [0, 0b101, 0b1])
def test_single_copy_quotient_is_base(A):
    H = path(3)
    assert is_isomorphic(quotient_family(QuotientSpec(H, 1, A)), H)


def test_quotient_rejects_dependent_or_full_glue():
    with pytest.raises(GraphError):
        quotient_family(QuotientSpec(path(3), 2, 0b011))
    with pytest.raises(GraphError):
        quotient_family(QuotientSpec(edgeless(2), 2, 0b11))


@given(graphs(1, 6), st.integers(1, 4), st.randoms(use_true_random=False))
def test_quotient_vertex_count(H, m, rnd):
    A = 0
    for v in rnd.sample(range(H.n), H.n):
        if not (H.adj[v] & A):
            A |= 1 << v
        if rnd.random() < 0.5:
            break
    if A == H.vertex_mask:
        A &= A - 1
    a = bin(A).count("1")
    G = quotient_family(QuotientSpec(H, m, A))
    assert G.n == m * (H.n - a) + a
    assert G.num_edges() == m * H.num_edges()


# joins -------------------------------------------------------------------------


def test_join_clique_matched_to_edgeless():
    G = join(complete(5), edgeless(5), "mat")
    for i in range(5):
        assert G.degree(5 + i) == 1 and G.has_edge(i, 5 + i)
    assert G.induced(0b11111) == complete(5)


def test_half_graph_on_two_is_p4():
    G = join(edgeless(2), edgeless(2), "tri")
    assert G.edges() == [(0, 2), (1, 2), (1, 3)]
    assert is_isomorphic(G, path(4))


def test_antimatching_of_three_is_hexagon():
    G = join(edgeless(3), edgeless(3), "antimat")
    assert all(d == 2 for d in G.degrees()) and G.is_connected()
    assert is_isomorphic(G, cycle(6))


def test_join_size_mismatch():
    with pytest.raises(GraphError):
        join(complete(2), complete(3), "mat")


@given(graphs(0, 5), st.data(), st.sampled_from(["mat", "antimat", "tri"]))
def test_join_sides_are_exact(G, data, kind):
    H = data.draw(graphs(G.n, G.n))
    J = join(G, H, kind)
    n = G.n
    assert J.induced((1 << n) - 1) == G
    assert J.induced(((1 << n) - 1) << n) == H
    rule = {"mat": lambda i, j: i == j, "antimat": lambda i, j: i != j, "tri": lambda i, j: i >= j}[kind]
    assert all(J.has_edge(i, n + j) == rule(i, j) for i in range(n) for j in range(n))


# derived graphs ----------------------------------------------------------------


@given(graphs())
def test_complement_is_an_involution(G):
    assert G.complement().complement() == G


@given(graphs())
def test_components_partition_vertices(G):
    comps = G.components()
    total = 0
    for c in comps:
        assert not total & c
        total |= c
        assert G.induced(c).is_connected()
    assert total == G.vertex_mask
    assert len(comps) == nx.number_connected_components(to_nx(G))


def test_delete_vertices_reindexes():
    H, index = path(5).delete_vertices(0b00100)
    assert H.edges() == [(0, 1), (2, 3)]
    assert index == {0: 0, 1: 1, 3: 2, 4: 3}


def test_delete_edges_rejects_non_edges():
    with pytest.raises(GraphError):
        path(3).delete_edges([(0, 2)])


# isomorphism -------------------------------------------------------------------


def test_isomorphism_examples():
    assert is_isomorphic(path(4), join(edgeless(2), edgeless(2), "tri"))
    assert not is_isomorphic(complete(3), path(3))


@given(graphs(), st.data())
def test_isomorphism_is_relabelling_invariant(G, data):
    perm = data.draw(permutations_of(G.n))
    H = G.relabel(perm)
    assert is_isomorphic(G, H) and is_isomorphic(H, G)
    assert canonical_form(G) == canonical_form(H)


@given(graphs(0, 6), graphs(0, 6))
def test_isomorphism_agrees_with_networkx(G, H):
    assert is_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))


def test_class_counts_match_networkx_atlas():
    # the networkx atlas lists every graph on up to seven vertices once
    atlas = nx.graph_atlas_g()
    for n in range(8):
        assert len(nonisomorphic_graphs(n)) == sum(1 for X in atlas if X.number_of_nodes() == n)


def test_six_vertex_classes_are_pairwise_distinct():
    reps = nonisomorphic_graphs(6)
    assert len(reps) == 156
    assert len({canonical_form(G) for G in reps}) == 156


# patterns ----------------------------------------------------------------------


def test_induced_p3_in_p5():
    mask = find_induced_pattern(path(5), path(3))
    vs = [v for v in range(5) if (mask >> v) & 1]
    assert vs[2] - vs[0] == 2


def test_no_independent_pair_in_clique():
    assert find_induced_pattern(complete(4), edgeless(2)) is None


def test_matching_join_is_induced_matching():
    G = join(edgeless(3), edgeless(3), "mat")
    assert find_induced_pattern(G, m_copies(complete(2), 3)) == G.vertex_mask


def test_subgraph_examples():
    assert find_subgraph_pattern(complete(4), path(4)) is not None
    assert find_subgraph_pattern(cycle(5), complete(3)) is None
    assert find_subgraph_pattern(star(5), m_copies(complete(2), 2)) is None


@given(graphs(0, 7), graphs(0, 4))
def test_subgraph_certificates(G, H):
    emb = find_subgraph_embedding(G, H)
    if emb is not None:
        assert check_embedding(G, H, emb, induced=False)
    found = find_subgraph_pattern(G, H)
    assert (found is None) == (emb is None)
    if found is not None:
        _, edges = found
        assert len(edges) == H.num_edges() and all(G.has_edge(u, v) for u, v in edges)


@given(graphs(0, 7), graphs(0, 4))
def test_induced_search_agrees_with_networkx(G, H):
    emb = find_induced_embedding(G, H)
    matcher = nx.algorithms.isomorphism.GraphMatcher(to_nx(G), to_nx(H))
    assert (emb is not None) == matcher.subgraph_is_isomorphic()
    if emb is not None:
        assert check_embedding(G, H, emb, induced=True)


def test_random_graph_respects_edge_cap():
    rng = random.Random(0)
    for _ in range(20):
        assert random_graph(rng, 7, 0.9, max_edges=12).num_edges() <= 12

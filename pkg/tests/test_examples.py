"""Small worked examples, one assertion group per operation."""

from __future__ import annotations

from brittlegraph.brittleness import Partition, brittleness, brittleness_naive, deletion_monotonicity_check, partition_width
from brittlegraph.connectivity import ConnFn, cutrank, edge_boundary, matching_boundary, vertex_boundary
from brittlegraph.finders import (
    EdgeColoring,
    bipartite_trichotomy,
    degree_or_path,
    delete_bridges,
    find_mono_clique,
    tutte_bridges,
)
from brittlegraph.gf2 import BitMatrix, gf2_rank
from brittlegraph.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    edgeless,
    join,
    m_copies,
    mask_of,
    path,
    star,
)
from brittlegraph.iso import is_isomorphic
from brittlegraph.lrw import check_lrw_brittleness_bound, concat, layout_width, linear_rank_width
from brittlegraph.vertex_minor import has_vertex_minor, local_complement, orbit, pivot

THREE_K2 = m_copies(complete(2), 3)  # edges 0-1, 2-3, 4-5


def test_rank_examples():
    assert BitMatrix.from_lists([[1, 1], [1, 1]]).rank() == 1
    for k in range(1, 6):
        assert gf2_rank(1 << i for i in range(k)) == k


def test_boundary_examples():
    assert cutrank(path(5), 0) == 0
    assert edge_boundary(cycle(4), 0b1) == 2
    assert edge_boundary(path(5), 0b00111) == 1
    assert matching_boundary(THREE_K2, mask_of([0, 2, 4])) == 3
    assert matching_boundary(star(6), 1) == 1
    assert matching_boundary(cycle(6), mask_of([0, 2, 4])) == 3
    assert vertex_boundary(complete(3), complete(3).edges()) == 0
    assert vertex_boundary(star(3), [(0, 1)]) == 1


def test_partition_width_examples():
    singletons = Partition(tuple((v,) for v in range(6)), 1)
    width, worst = partition_width(ConnFn.RANK_CUT, THREE_K2, singletons)
    assert width == 3
    union = [singletons.blocks[i][0] for i in worst]
    assert sorted({v // 2 for v in union}) == [0, 1, 2] and len(union) == 3
    whole = Partition((tuple(range(4)),), 4)
    for fn in (ConnFn.EDGE_CUT, ConnFn.MATCHING_CUT, ConnFn.RANK_CUT):
        assert partition_width(fn, cycle(4), whole)[0] == 0


def test_brittleness_examples():
    for n in range(2, 7):
        assert brittleness(ConnFn.RANK_CUT, complete(n), 1).value == 1
    assert brittleness(ConnFn.RANK_CUT, THREE_K2, 1).value == 3
    assert brittleness(ConnFn.EDGE_CUT, star(3), 1).value == 3
    assert brittleness_naive(ConnFn.MATCHING_CUT, m_copies(complete(2), 2), 1) == 2
    for fn in ConnFn:
        assert brittleness_naive(fn, Graph.empty(1), 1) == 0


def test_deletion_check_examples():
    assert deletion_monotonicity_check(path(5), 4, 2).passed
    assert deletion_monotonicity_check(Graph.empty(1), 0, 1).passed
    assert all(deletion_monotonicity_check(THREE_K2, v, 1).passed for v in range(6))


def test_local_complement_examples():
    assert local_complement(path(3), 1) == complete(3)
    assert pivot(complete(2), 0, 1) == complete(2)
    assert len(orbit(complete(2)).states) == 1
    assert orbit(path(3)).find_isomorphic(complete(3)) is not None
    assert orbit(join(edgeless(3), edgeless(3), "tri")).find_isomorphic(path(6)) is not None


def test_vertex_minor_examples():
    for n in range(2, 6):
        r = has_vertex_minor(complete(n + 1), star(n))
        assert r.found and len(r.word) == 1
    r = has_vertex_minor(cycle(5), cycle(5))
    assert r.found and len(r.word) == 0


def test_bridge_examples():
    bridges = tutte_bridges(path(5), 0b00100)
    assert sorted(b.edges for b in bridges) == [{(0, 1), (1, 2)}, {(2, 3), (3, 4)}]
    assert sorted(b.vertices for b in bridges) == [0b00111, 0b11100]
    assert len(tutte_bridges(complete(3), 0b111)) == 3
    (only,) = tutte_bridges(cycle(5), 0)
    assert sorted(only.edges) == cycle(5).edges()
    assert delete_bridges(path(5), 0b00100, 2) == Graph.empty(1).with_labels([path(5).label(2)])
    assert delete_bridges(cycle(5), 0b101, 0) == cycle(5)


def test_clique_examples():
    assert find_mono_clique(EdgeColoring.from_graph(complete(4)), 4) == (0b1111, 1)


def test_trichotomy_examples():
    side, other = 0b000111, 0b111000
    assert bipartite_trichotomy(join(edgeless(3), edgeless(3), "mat"), side, other, 2)[2] == "mat"
    assert bipartite_trichotomy(complete_bipartite(3, 3), side, other, 2) is None
    half = join(edgeless(4), edgeless(4), "tri")
    assert bipartite_trichotomy(half, 0x0F, 0xF0, 3)[2] == "tri"


def test_degree_or_path_examples():
    cert = degree_or_path(cycle(10), 4, 4)
    assert cert.kind == "path" and len(cert.vertices) == 4
    cert = degree_or_path(star(7), 5, 9)
    assert cert.kind == "degree" and cert.vertices == (0,)
    assert degree_or_path(complete(3), 4, 4) is None


def test_layout_examples():
    assert layout_width(path(4), [0, 1, 2, 3]) == 1
    assert layout_width(Graph.empty(1), [0]) == 0
    assert layout_width(THREE_K2, [0, 2, 4, 1, 3, 5]) == 3
    for n in range(2, 9):
        assert linear_rank_width(path(n)).value == 1
    assert concat((0, 1), (2,)) == (0, 1, 2)
    assert concat((0, 1), ()) == (0, 1)


def test_lrw_bound_examples():
    r = check_lrw_brittleness_bound(THREE_K2, 2)
    assert r.lrw == 1 and r.passed
    r = check_lrw_brittleness_bound(complete(5), 1)
    assert (r.lrw, r.brittleness, r.bound) == (1, 1, 1)


def test_quotient_and_join_pictures():
    G = join(complete(5), edgeless(5), "mat")
    assert G.num_edges() == 10 + 5
    assert is_isomorphic(join(edgeless(2), edgeless(2), "tri"), path(4))

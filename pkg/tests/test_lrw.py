from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brittlegraph.graph import GraphError, complete, cycle, edgeless, join, path, star
from brittlegraph.lrw import (
    MAX_LRW_VERTICES,
    block_layout,
    check_lrw_brittleness_bound,
    concat,
    layout_width,
    linear_rank_width,
)
from brittlegraph.vertex_minor import local_complement

from strategies import graphs


def brute_lrw(G) -> int:
    return min((layout_width(G, p) for p in itertools.permutations(range(G.n))), default=0)


@pytest.mark.parametrize("G,value", [(path(6), 1), (complete(5), 1), (star(4), 1), (edgeless(4), 0), (path(1), 0)])
def test_known_values(G, value):
    assert linear_rank_width(G).value == value


def test_layout_width_of_path_orders():
    assert layout_width(path(4), [0, 1, 2, 3]) == 1
    assert layout_width(path(4), [0, 2, 1, 3]) == 2


def test_layout_must_be_a_permutation():
    with pytest.raises(GraphError):
        layout_width(path(3), [0, 1])
    with pytest.raises(GraphError):
        layout_width(path(3), [0, 1, 1])


def test_vertex_cap():
    with pytest.raises(GraphError):
        linear_rank_width(edgeless(MAX_LRW_VERTICES + 1))


@given(graphs(0, 7))
@settings(max_examples=60)
def test_dp_matches_permutation_brute_force(G):
    r = linear_rank_width(G)
    assert r.value == brute_lrw(G)
    assert sorted(r.layout) == list(range(G.n))
    assert layout_width(G, r.layout) == r.value


@given(graphs(1, 8), st.data())
@settings(max_examples=40)
def test_lrw_is_local_complement_invariant(G, data):
    v = data.draw(st.integers(0, G.n - 1))
    assert linear_rank_width(local_complement(G, v)).value == linear_rank_width(G).value


def test_cycles_have_width_two():
    for n in range(5, 9):
        assert linear_rank_width(cycle(n)).value == 2


def test_concat():
    assert concat([0, 2], [1]) == (0, 2, 1)
    with pytest.raises(GraphError):
        concat([0, 1], [1])


def test_block_layout_sorts_within_blocks():
    assert block_layout([(3, 1), (0,), (2, 4)]) == (1, 3, 0, 2, 4)


@given(graphs(0, 6), st.integers(1, 3))
@settings(max_examples=60)
def test_lrw_brittleness_bound(G, k):
    r = check_lrw_brittleness_bound(G, k)
    assert r.passed, r
    assert r.lrw <= r.block_layout_width


def test_bound_on_matching_join():
    G = join(edgeless(3), edgeless(3), "mat")
    r = check_lrw_brittleness_bound(G, 2)
    assert r.lrw == 1 and r.passed

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brittlegraph.bounds import (
    MAX_BITS,
    BoundParams,
    BoundTooLarge,
    RankBounds,
    bound_ell,
    dov_placeholder,
    edge_bound,
    matching_bound,
    ramsey_pigeonhole,
    vertex_bound,
)


def test_headline_values():
    assert bound_ell("vertex", BoundParams(1, 2)) == 4096
    assert bound_ell("edge", BoundParams(1, 3)) == 6
    assert bound_ell("matching", BoundParams(2, 3)) == 18


def test_edge_recursion_unrolls():
    # k = 2 substitutes n -> 8(n-1)^2 + 1 into the k = 1 formula
    inner = 8 * 2**2 + 1
    assert edge_bound(2, 3) == inner * (inner - 1)


def test_vertex_recursion_with_one_copy():
    k, n = 2, 1
    sunflower = k * k * math.factorial(k) * math.comb(10, 4) ** k * (n - 1) ** k
    assert sunflower == 0
    assert vertex_bound(2, 1) == vertex_bound(1, 36) == 256 * 36**4


@given(st.integers(1, 6), st.integers(1, 30))
def test_matching_bound_formula(k, n):
    assert matching_bound(k, n) == (k + 1) ** k * (n - 1)


@given(st.integers(1, 3), st.integers(1, 6))
def test_bounds_grow_with_n(k, n):
    for fn in (vertex_bound, edge_bound, matching_bound):
        assert fn(k, n + 1) >= fn(k, n)


def test_ramsey_and_placeholder_values():
    assert ramsey_pigeonhole(3, 2) == 2**4 + 1
    assert ramsey_pigeonhole(1, 5) == 2
    assert dov_placeholder(1) == 2**4
    assert dov_placeholder(2) == 2**16


def test_params_validation():
    with pytest.raises(ValueError):
        BoundParams(0, 1)
    with pytest.raises(ValueError):
        BoundParams(1, 0)


def test_unknown_family():
    with pytest.raises(ValueError, match="unknown family"):
        bound_ell("tree", BoundParams(1, 1))


def test_rank_needs_both_rules():
    with pytest.raises(ValueError):
        bound_ell("rank", BoundParams(1, 1, ramsey_bound=None))


def test_rank_default_rules_are_too_large():
    with pytest.raises(BoundTooLarge):
        bound_ell("rank", BoundParams(1, 1))


def test_rank_with_identity_rules():
    ident = BoundParams(1, 1, ramsey_bound=lambda n, c: n, dov_bound=lambda n: n)
    # l2 = max(3, 2) = 3, then R = 3 and f = 3, minus one
    assert bound_ell("rank", ident) == 2


def test_rank_helpers_with_identity_rules():
    rb = RankBounds(lambda n, c: n, lambda n: n)
    # f1(2, 1) uses size max(ceil(3/2)+1, 4) = 4 with 4 colours
    assert rb.f1(2, 1) == 2 * (4 - 1) + 1
    assert rb.f2(2, 1) == rb.f1(2, 1) + 2
    assert rb.n2(2, 1) == rb.n3(2, 1) + 1
    assert rb.N(2, 1) == rb.n1(2, 1) == rb.n2(2, 1)


def test_huge_exponent_message():
    with pytest.raises(BoundTooLarge, match="bit"):
        dov_placeholder(40)
    with pytest.raises(BoundTooLarge):
        ramsey_pigeonhole(MAX_BITS, 2)

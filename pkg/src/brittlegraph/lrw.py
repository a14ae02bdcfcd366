"""Layout width and exact linear rank-width."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .brittleness import brittleness
from .connectivity import ConnFn, cutrank
from .graph import Graph, GraphError, bits

MAX_LRW_VERTICES = 18


@dataclass(frozen=True)
class LrwResult:
    value: int
    layout: tuple[int, ...]


def _check_layout(G: Graph, order: Sequence[int]) -> None:
    if sorted(order) != list(range(G.n)):
        raise GraphError("a layout must list every vertex exactly once")


def layout_width(G: Graph, order: Sequence[int]) -> int:
    """Largest cut-rank of a proper prefix; 0 for graphs with one vertex or none."""
    _check_layout(G, order)
    width, prefix = 0, 0
    for v in order[:-1]:
        prefix |= 1 << v
        width = max(width, cutrank(G, prefix))
    return width


def linear_rank_width(G: Graph) -> LrwResult:
    """Exact value by dynamic programming over prefix sets.

    ``cost[S]`` is the least possible maximum cut-rank over orderings of S
    placed first, counting every prefix up to and including S itself.
    """
    n = G.n
    if n > MAX_LRW_VERTICES:
        raise GraphError(f"linear rank-width is capped at {MAX_LRW_VERTICES} vertices, got {n}")
    if n <= 1:
        return LrwResult(0, tuple(range(n)))
    full = G.vertex_mask
    cut = [cutrank(G, S) for S in range(1 << n)]
    cost = [0] * (1 << n)
    last = [0] * (1 << n)
    for S in range(1, 1 << n):
        best, arg = None, -1
        for v in bits(S):
            c = cost[S ^ (1 << v)]
            if best is None or c < best:
                best, arg = c, v
        cost[S] = max(best, cut[S] if S != full else 0)
        last[S] = arg
    order = []
    S = full
    while S:
        order.append(last[S])
        S ^= 1 << last[S]
    layout = tuple(reversed(order))
    return LrwResult(cost[full], layout)


def concat(L1: Sequence[int], L2: Sequence[int]) -> tuple[int, ...]:
    if set(L1) & set(L2):
        raise GraphError("layouts to concatenate must be disjoint")
    return tuple(L1) + tuple(L2)


@dataclass(frozen=True)
class LrwBoundCheck:
    k: int
    lrw: int
    brittleness: int
    block_layout: tuple[int, ...]
    block_layout_width: int

    @property
    def bound(self) -> int:
        return self.brittleness + self.k // 2

    @property
    def passed(self) -> bool:
        return self.lrw <= self.bound and self.block_layout_width <= self.bound


def block_layout(blocks: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Concatenate the blocks of a partition, each in increasing order."""
    layout: tuple[int, ...] = ()
    for block in blocks:
        layout = concat(layout, sorted(block))
    return layout


def check_lrw_brittleness_bound(G: Graph, k: int) -> LrwBoundCheck:
    """Compare linear rank-width with ``beta_k^rho + floor(k/2)``.

    Besides the exact value, the layout that lists an optimal partition block
    by block is measured against the same bound.
    """
    result = brittleness(ConnFn.RANK_CUT, G, k)
    layout = block_layout(result.partition.blocks)
    return LrwBoundCheck(k, linear_rank_width(G).value, result.value, layout, layout_width(G, layout))

"""Partition widths and exact k-brittleness.

The ground set of a connectivity function is indexed ``0..m-1`` (vertices, or
edges in :func:`connectivity.edge_index` order for ``vc``).  A partition is
stored as its blocks of ground elements; internally the solvers work with
element masks.

:func:`brittleness` is a branch and bound over restricted-growth strings.
Elements are assigned in index order, so after ``i`` assignments the assigned
set is the prefix ``{0..i-1}``.  Evaluating every union of the partial blocks
with the function restricted to that prefix gives a lower bound on the width of
every completion.  :func:`brittleness_naive` is the independent oracle: it
lists every partition and evaluates every union with the public functions.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from numba import njit

from .connectivity import ConnFn, edge_index, evaluate, ground_elements
from .graph import Graph, bits
from .kernels import prefix_table, table_inputs
from .report import Report, stopwatch

MAX_BLOCKS = 25
MAX_GROUND = 12
MAX_NAIVE_GROUND = 9


class SearchLimitError(RuntimeError):
    """Instance exceeds a configured search cap."""


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple, ...]
    k: int

    def __post_init__(self) -> None:
        for block in self.blocks:
            if not block:
                raise ValueError("blocks must be nonempty")
            if len(block) > self.k:
                raise ValueError(f"block {block} exceeds size cap k={self.k}")

    def validate(self, ground: Sequence) -> None:
        seen = [x for b in self.blocks for x in b]
        if len(seen) != len(set(seen)):
            raise ValueError("blocks are not disjoint")
        if set(seen) != set(ground):
            raise ValueError("blocks do not cover the ground set")

    def as_lists(self) -> list[list]:
        return [list(b) for b in self.blocks]


@dataclass(frozen=True)
class BrittlenessResult:
    value: int
    partition: Partition
    worst_union: tuple[int, ...]


def _element_masks(fn: ConnFn, G: Graph, P: Partition) -> list[int]:
    ground = ground_elements(fn, G)
    P.validate(ground)
    index = {x: i for i, x in enumerate(ground)}
    return [sum(1 << index[x] for x in block) for block in P.blocks]


def _union_value(fn: ConnFn, G: Graph, ground: list, mask: int) -> int:
    if fn.on_edges:
        return evaluate(fn, G, [ground[i] for i in bits(mask)])
    return evaluate(fn, G, mask)


def partition_width(fn: ConnFn, G: Graph, P: Partition) -> tuple[int, tuple[int, ...]]:
    """Maximum of ``fn`` over all unions of blocks, with a maximising index set.

    Only index sets containing block 0 are enumerated; the others are
    complements and have the same value.
    """
    blocks = _element_masks(fn, G, P)
    t = len(blocks)
    if t > MAX_BLOCKS:
        raise SearchLimitError(f"{t} blocks exceeds the cap of {MAX_BLOCKS}")
    if t == 0:
        return 0, ()
    ground = ground_elements(fn, G)
    best, best_I = -1, ()
    for rest in itertools.product((0, 1), repeat=t - 1):
        I = (0,) + tuple(i + 1 for i, x in enumerate(rest) if x)
        mask = 0
        for i in I:
            mask |= blocks[i]
        value = _union_value(fn, G, ground, mask)
        if value > best:
            best, best_I = value, I
    return best, best_I


def _prefix_tables(fn: ConnFn, G: Graph, m: int) -> list[np.ndarray]:
    """``tables[i][S]`` = value on S within the prefix ``{0..i-1}``, for S ⊆ prefix."""
    data = table_inputs(fn, G)
    return [prefix_table(fn, G, i, data) for i in range(m + 1)]


def _ground_cap(default: int, env: str) -> int:
    return int(os.environ.get(env, default))


def _check_ground(fn: ConnFn, G: Graph, k: int, max_ground: int | None) -> list:
    if k < 1:
        raise ValueError("k must be positive")
    ground = ground_elements(fn, G)
    cap = max_ground if max_ground is not None else _ground_cap(MAX_GROUND, "BRITTLEGRAPH_MAX_GROUND")
    if len(ground) > cap:
        raise SearchLimitError(f"ground set of {len(ground)} elements exceeds the cap of {cap}")
    return ground


def _search(fn: ConnFn, G: Graph, k: int, m: int, incumbent: int | None) -> tuple[int, list[int] | None]:
    """Least width below ``incumbent`` and its restricted-growth string.

    Returns ``(incumbent, None)`` when no partition beats the incumbent; with
    ``incumbent=None`` the search is unrestricted.
    """
    tables = _prefix_tables(fn, G, m)
    selector = np.arange(1 << max(0, m - 1), dtype=np.int64)
    best_value = int(tables[m].max()) + 1 if incumbent is None else incumbent
    best_rgs: list[int] | None = None
    rgs = [0] * m
    sizes: list[int] = []

    def descend(i: int, unions: np.ndarray) -> None:
        nonlocal best_value, best_rgs
        if i == m:
            width = int(tables[m][unions].max())
            if width < best_value:
                best_value, best_rgs = width, rgs.copy()
            return
        bit = 1 << i
        t = len(sizes)
        table = tables[i + 1]
        for b in range(t + 1):
            if best_value == 0:
                return
            if b < t:
                if sizes[b] >= k:
                    continue
                if b == 0:
                    nxt = unions | bit
                else:
                    nxt = unions | (((selector[: len(unions)] >> (b - 1)) & 1) << i)
            elif t == 0:
                nxt = np.array([bit], dtype=np.int64)
            else:
                nxt = np.concatenate((unions, unions | bit))
            if int(table[nxt].max()) >= best_value:
                continue
            rgs[i] = b
            if b == t:
                sizes.append(1)
            else:
                sizes[b] += 1
            descend(i + 1, nxt)
            if b == t:
                sizes.pop()
            else:
                sizes[b] -= 1

    descend(0, np.zeros(0, dtype=np.int64))
    return best_value, best_rgs


def brittleness(
    fn: ConnFn, G: Graph, k: int, max_ground: int | None = None
) -> BrittlenessResult:
    """Exact k-brittleness with an optimal partition.

    Among optimal partitions the one with the lexicographically smallest
    restricted-growth string is returned.
    """
    ground = _check_ground(fn, G, k, max_ground)
    m = len(ground)
    if m == 0:
        return BrittlenessResult(0, Partition((), k), ())
    best_value, best_rgs = _search(fn, G, k, m, None)
    assert best_rgs is not None
    blocks: list[list] = [[] for _ in range(max(best_rgs) + 1)]
    for i, b in enumerate(best_rgs):
        blocks[b].append(ground[i])
    partition = Partition(tuple(tuple(b) for b in blocks), k)
    width, worst = partition_width(fn, G, partition)
    if width != best_value:
        raise AssertionError(f"search width {best_value} disagrees with re-evaluation {width}")
    return BrittlenessResult(best_value, partition, worst)


def brittleness_at_least(
    fn: ConnFn, G: Graph, k: int, bound: int, max_ground: int | None = None
) -> tuple[bool, Partition | None]:
    """Decide ``beta_k >= bound`` exactly.

    The search only looks for partitions of width below ``bound``; when it
    finds one, that partition is returned as a counterexample.
    """
    ground = _check_ground(fn, G, k, max_ground)
    m = len(ground)
    if m == 0:
        return bound <= 0, None if bound <= 0 else Partition((), k)
    if bound <= 0:
        return True, None
    _, rgs = _search(fn, G, k, m, bound)
    if rgs is None:
        return True, None
    blocks: list[list] = [[] for _ in range(max(rgs) + 1)]
    for i, b in enumerate(rgs):
        blocks[b].append(ground[i])
    return False, Partition(tuple(tuple(b) for b in blocks), k)


def restricted_growth_strings(m: int, k: int) -> Iterator[list[int]]:
    """All set partitions of ``{0..m-1}`` with blocks of size at most k."""
    rgs = [0] * m
    sizes: list[int] = []

    def rec(i: int) -> Iterator[list[int]]:
        if i == m:
            yield rgs.copy()
            return
        for b in range(len(sizes) + 1):
            opened = b == len(sizes)
            if opened:
                sizes.append(1)
            elif sizes[b] >= k:
                continue
            else:
                sizes[b] += 1
            rgs[i] = b
            yield from rec(i + 1)
            if opened:
                sizes.pop()
            else:
                sizes[b] -= 1

    yield from rec(0)


@njit(cache=True)
def _exhaustive_min_width(table: np.ndarray, m: int, k: int) -> int:
    """Visit every restricted-growth string and return the least partition width.

    A partition's unions are scanned in Gray-code order (all containing block
    0); the scan of one partition stops as soon as a union reaches the best
    width seen so far, since that partition cannot be better.
    """
    best = int(table.max()) + 1
    ctz = np.zeros(max(1, 1 << max(0, m - 1)), dtype=np.int64)
    for j in range(1, len(ctz)):
        c = 0
        while not (j >> c) & 1:
            c += 1
        ctz[j] = c
    rgs = np.full(m, -1, dtype=np.int64)
    sizes = np.zeros(m + 1, dtype=np.int64)
    blocks = np.zeros(m + 1, dtype=np.int64)
    nb = 0
    i = 0
    while i >= 0:
        if i == m:
            u = blocks[0]
            width = table[u]
            if width < best:
                for j in range(1, 1 << (nb - 1)):
                    u ^= blocks[ctz[j] + 1]
                    if table[u] > width:
                        width = table[u]
                        if width >= best:
                            break
                if width < best:
                    best = width
            i -= 1
            continue
        b = rgs[i]
        if b >= 0:
            sizes[b] -= 1
            blocks[b] ^= 1 << i
            if sizes[b] == 0:
                nb -= 1
        b += 1
        while b < nb and sizes[b] >= k:
            b += 1
        if b > nb:
            rgs[i] = -1
            i -= 1
            continue
        rgs[i] = b
        if b == nb:
            nb += 1
        sizes[b] += 1
        blocks[b] |= 1 << i
        i += 1
    return best


def brittleness_naive(
    fn: ConnFn, G: Graph, k: int, max_ground: int | None = None, compiled: bool | None = None
) -> int:
    """Minimum width over every partition into blocks of size at most k.

    Union values come from the public connectivity functions.  Up to 9 ground
    elements the enumeration runs in plain Python; larger ground sets (up to
    ``max_ground``) use the compiled enumerator.
    """
    if k < 1:
        raise ValueError("k must be positive")
    ground = ground_elements(fn, G)
    m = len(ground)
    cap = max_ground if max_ground is not None else MAX_NAIVE_GROUND
    if m > cap:
        raise SearchLimitError(f"naive oracle is capped at {cap} elements, got {m}")
    if m == 0:
        return 0
    values = [_union_value(fn, G, ground, S) for S in range(1 << m)]
    if compiled is None:
        compiled = m > MAX_NAIVE_GROUND
    if compiled:
        return int(_exhaustive_min_width(np.array(values, dtype=np.int64), m, k))
    best = None
    for rgs in restricted_growth_strings(m, k):
        blocks = [0] * (max(rgs) + 1)
        for i, b in enumerate(rgs):
            blocks[b] |= 1 << i
        unions = [0]
        for block in blocks:
            unions += [u | block for u in unions]
        width = max(values[u] for u in unions)
        if best is None or width < best:
            best = width
    return best


def edge_partition_from_masks(G: Graph, masks: Sequence[int], k: int) -> Partition:
    edges = edge_index(G)
    return Partition(tuple(tuple(edges[i] for i in bits(m)) for m in masks), k)


def deletion_monotonicity_check(G: Graph, v: int, k: int) -> Report:
    """Check that deleting v lowers the nu- and rho-brittleness by at most one."""
    H = G.delete_vertices(1 << v)[0]
    values = {}
    with stopwatch() as sw:
        for fn in (ConnFn.MATCHING_CUT, ConnFn.RANK_CUT):
            values[fn.value] = (brittleness(fn, G, k).value, brittleness(fn, H, k).value)
    ok = all(g <= h + 1 for g, h in values.values())
    return Report(
        "lemma-delmat",
        {"n": G.n, "v": v, "k": k},
        "pass" if ok else "fail",
        value={name: {"G": g, "G-v": h} for name, (g, h) in values.items()},
        witness={name: [g, h] for name, (g, h) in values.items()},
        elapsed_ms=sw.elapsed_ms,
    )

"""Isomorphism, canonical forms and pattern search for small graphs."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, bits, mask_of


def _refine(G: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; cell order depends only on the graph structure."""
    while True:
        cell_masks = [mask_of(c) for c in cells]
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {v: tuple(bin(G.adj[v] & m).count("1") for m in cell_masks) for v in cell}
            for key in sorted(set(sig.values())):
                new_cells.append([v for v in cell if sig[v] == key])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _code(G: Graph, order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(mask_of(pos[u] for u in bits(G.adj[v])) for v in order)


def _are_twins(G: Graph, x: int, y: int) -> bool:
    return G.adj[x] & ~(1 << y) == G.adj[y] & ~(1 << x)


def canonical_order(G: Graph) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(code, order)``; isomorphic graphs get equal codes.

    ``order[i]`` is the vertex of ``G`` placed at canonical position ``i``.
    """
    if G.n == 0:
        return (), []
    degree_classes: dict[int, list[int]] = {}
    for v in range(G.n):
        degree_classes.setdefault(G.degree(v), []).append(v)
    start = _refine(G, [degree_classes[d] for d in sorted(degree_classes)])
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(G, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        tried: list[int] = []
        for x in cell:
            if any(_are_twins(G, x, y) for y in tried):
                continue
            tried.append(x)
            rest = [v for v in cell if v != x]
            search(_refine(G, cells[:target] + [[x], rest] + cells[target + 1 :]))

    search(start)
    return best[0], best[1]


def canonical_form(G: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable isomorphism invariant that is complete (equal iff isomorphic)."""
    return G.n, canonical_order(G)[0]


def canonical_graph(G: Graph) -> Graph:
    code = canonical_order(G)[0]
    return Graph(G.n, code)


def find_isomorphism(G: Graph, H: Graph) -> dict[int, int] | None:
    """A map ``V(G) -> V(H)`` preserving adjacency, or None."""
    if G.n != H.n or G.num_edges() != H.num_edges() or sorted(G.degrees()) != sorted(H.degrees()):
        return None
    code_g, order_g = canonical_order(G)
    code_h, order_h = canonical_order(H)
    if code_g != code_h:
        return None
    return {g: h for g, h in zip(order_g, order_h)}


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return find_isomorphism(G, H) is not None


def _pattern_order(H: Graph) -> list[int]:
    """Connected-first order of H's vertices: each next vertex has most placed neighbours."""
    order: list[int] = []
    placed = 0
    remaining = set(range(H.n))
    while remaining:
        v = max(
            remaining,
            key=lambda u: (bin(H.adj[u] & placed).count("1"), H.degree(u), -u),
        )
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def _embeddings(G: Graph, H: Graph, induced: bool) -> Iterator[dict[int, int]]:
    if H.n > G.n:
        return
    order = _pattern_order(H)
    g_deg = G.degrees()
    h_deg = H.degrees()
    mapping: dict[int, int] = {}

    def extend(i: int, used: int) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield dict(mapping)
            return
        h = order[i]
        candidates = G.vertex_mask & ~used
        for prev in order[:i]:
            g_prev = mapping[prev]
            if H.has_edge(h, prev):
                candidates &= G.adj[g_prev]
            elif induced:
                candidates &= ~G.adj[g_prev]
        for g in bits(candidates):
            if g_deg[g] < h_deg[h]:
                continue
            mapping[h] = g
            yield from extend(i + 1, used | (1 << g))
            del mapping[h]

    yield from extend(0, 0)


def find_induced_embedding(G: Graph, H: Graph) -> dict[int, int] | None:
    return next(_embeddings(G, H, induced=True), None)


def find_induced_pattern(G: Graph, H: Graph) -> int | None:
    """Vertex mask of an induced copy of H in G, or None."""
    emb = find_induced_embedding(G, H)
    return None if emb is None else mask_of(emb.values())


def find_subgraph_embedding(G: Graph, H: Graph) -> dict[int, int] | None:
    return next(_embeddings(G, H, induced=False), None)


def find_subgraph_pattern(G: Graph, H: Graph) -> tuple[int, frozenset[tuple[int, int]]] | None:
    """A (not necessarily induced) copy of H in G as ``(vertex mask, edge set)``."""
    emb = find_subgraph_embedding(G, H)
    if emb is None:
        return None
    edges = frozenset(tuple(sorted((emb[u], emb[v]))) for u, v in H.edges())
    return mask_of(emb.values()), edges


def check_embedding(G: Graph, H: Graph, emb: dict[int, int], induced: bool) -> bool:
    """Independent certificate check for an embedding returned by the finders."""
    if sorted(emb) != list(range(H.n)) or len(set(emb.values())) != H.n:
        return False
    for u in range(H.n):
        for v in range(u + 1, H.n):
            if H.has_edge(u, v) and not G.has_edge(emb[u], emb[v]):
                return False
            if induced and not H.has_edge(u, v) and G.has_edge(emb[u], emb[v]):
                return False
    return True


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class on n vertices (canonical forms)."""
    if n == 0:
        return (Graph.empty(0),)
    seen: dict[tuple, Graph] = {}
    for base in nonisomorphic_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = list(base.adj) + [nbrs]
            for u in bits(nbrs):
                rows[u] |= 1 << (n - 1)
            G = Graph(n, tuple(rows))
            key = canonical_form(G)
            if key not in seen:
                seen[key] = canonical_graph(G)
    return tuple(seen[k] for k in sorted(seen))

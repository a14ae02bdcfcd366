"""The four connectivity functions.

===========  ========  ===========  =============================================
name         symbol    ground set   value on X
===========  ========  ===========  =============================================
``vc``       kappa     edges        vertices touching an edge in X and one not in X
``ec``       eta       vertices     edges with exactly one end in X
``matc``     nu        vertices     maximum matching of the X / V-X cut
``cutrk``    rho       vertices     GF(2) rank of the X x (V-X) adjacency block
===========  ========  ===========  =============================================

Each function has a *restricted* form ``value(S, D)`` for ``S ⊆ D``: the same
function evaluated on the substructure ``D`` (the induced subgraph ``G[D]``
for vertex functions, the spanning subgraph with edge set ``D`` for ``vc``).
Restricting never increases the value of a fixed cut, which is what the
brittleness search uses as its lower bound.
"""

from __future__ import annotations

import enum
from typing import Callable, Iterable

from .gf2 import gf2_rank
from .graph import Graph, GraphError, bits, mask_of, popcount


class ConnFn(enum.Enum):
    VERTEX_CUT = "vc"
    EDGE_CUT = "ec"
    MATCHING_CUT = "matc"
    RANK_CUT = "cutrk"

    @property
    def on_edges(self) -> bool:
        return self is ConnFn.VERTEX_CUT

    @property
    def symbol(self) -> str:
        return {"vc": "kappa", "ec": "eta", "matc": "nu", "cutrk": "rho"}[self.value]

    @classmethod
    def parse(cls, name: str) -> ConnFn:
        key = name.strip().lower()
        for fn in cls:
            if key in (fn.value, fn.symbol, fn.name.lower()):
                return fn
        aliases = {"cutrank": cls.RANK_CUT, "rank": cls.RANK_CUT, "vertex": cls.VERTEX_CUT,
                   "edge": cls.EDGE_CUT, "matching": cls.MATCHING_CUT}
        if key in aliases:
            return aliases[key]
        raise ValueError(f"unknown connectivity function {name!r}")


def cutrank(G: Graph, S: int) -> int:
    comp = G.vertex_mask & ~S
    return gf2_rank(G.adj[v] & comp for v in bits(S & G.vertex_mask))


def edge_boundary(G: Graph, S: int) -> int:
    comp = G.vertex_mask & ~S
    return sum(popcount(G.adj[v] & comp) for v in bits(S & G.vertex_mask))


def _max_matching(left: list[int], adj: dict[int, int]) -> int:
    """Kuhn's augmenting paths; ``adj[l]`` is the right-side neighbour mask of ``l``."""
    match_right: dict[int, int] = {}

    def augment(u: int, visited: set[int]) -> bool:
        for w in bits(adj[u]):
            if w in visited:
                continue
            visited.add(w)
            if w not in match_right or augment(match_right[w], visited):
                match_right[w] = u
                return True
        return False

    return sum(1 for u in left if augment(u, set()))


def matching_boundary(G: Graph, S: int) -> int:
    comp = G.vertex_mask & ~S
    left = [v for v in bits(S & G.vertex_mask) if G.adj[v] & comp]
    return _max_matching(left, {v: G.adj[v] & comp for v in left})


def edge_index(G: Graph) -> list[tuple[int, int]]:
    """Ground-set order for ``vc``: edges sorted lexicographically."""
    return G.edges()


def _incidence(G: Graph, edges: list[tuple[int, int]]) -> list[int]:
    inc = [0] * G.n
    for i, (u, v) in enumerate(edges):
        inc[u] |= 1 << i
        inc[v] |= 1 << i
    return inc


def edge_set_mask(G: Graph, F: Iterable[tuple[int, int]]) -> int:
    index = {e: i for i, e in enumerate(edge_index(G))}
    m = 0
    for u, v in F:
        key = (min(u, v), max(u, v))
        if key not in index:
            raise GraphError(f"({u}, {v}) is not an edge")
        m |= 1 << index[key]
    return m


def vertex_boundary(G: Graph, F: Iterable[tuple[int, int]]) -> int:
    edges = edge_index(G)
    mask = edge_set_mask(G, F)
    full = (1 << len(edges)) - 1
    return sum(1 for inc in _incidence(G, edges) if inc & mask and inc & full & ~mask)


def evaluate(fn: ConnFn, G: Graph, X) -> int:
    """Evaluate ``fn`` on X: an int vertex mask, or an iterable of edges for ``vc``."""
    if fn.on_edges:
        if isinstance(X, int):
            raise TypeError("vc is defined on edge sets, got a vertex mask")
        return vertex_boundary(G, X)
    if not isinstance(X, int):
        raise TypeError(f"{fn.value} is defined on vertex masks")
    if X & ~G.vertex_mask:
        raise GraphError("vertex set outside V(G)")
    return {ConnFn.EDGE_CUT: edge_boundary, ConnFn.MATCHING_CUT: matching_boundary,
            ConnFn.RANK_CUT: cutrank}[fn](G, X)


def ground_size(fn: ConnFn, G: Graph) -> int:
    return G.num_edges() if fn.on_edges else G.n


def ground_elements(fn: ConnFn, G: Graph) -> list:
    return edge_index(G) if fn.on_edges else list(range(G.n))


def restricted_function(fn: ConnFn, G: Graph) -> Callable[[int, int], int]:
    """``value(S, D)`` over element masks; see the module docstring."""
    if fn.on_edges:
        inc = [r for r in _incidence(G, edge_index(G)) if r]

        def kappa(S: int, D: int) -> int:
            rest = D & ~S
            return sum(1 for r in inc if r & S and r & rest)

        return kappa

    adj = G.adj
    if fn is ConnFn.EDGE_CUT:
        def eta(S: int, D: int) -> int:
            rest = D & ~S
            return sum(popcount(adj[v] & rest) for v in bits(S))

        return eta
    if fn is ConnFn.MATCHING_CUT:
        def nu(S: int, D: int) -> int:
            rest = D & ~S
            left = [v for v in bits(S) if adj[v] & rest]
            return _max_matching(left, {v: adj[v] & rest for v in left})

        return nu

    def rho(S: int, D: int) -> int:
        rest = D & ~S
        return gf2_rank(adj[v] & rest for v in bits(S))

    return rho


def as_vertex_mask(vertices: Iterable[int]) -> int:
    return mask_of(vertices)

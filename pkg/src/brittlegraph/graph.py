"""Simple undirected graphs stored as bit rows.

Vertices are the integers ``0..n-1``; row ``adj[v]`` is an int whose bit ``u``
is set iff ``uv`` is an edge.  Vertex sets are plain int bitmasks and edge sets
are frozensets of ``(u, v)`` pairs with ``u < v``.

Canonical vertex orders of the families:

* ``path(n)``: ``0-1-...-(n-1)``
* ``star(n)``: centre ``0``, leaves ``1..n``
* ``complete_bipartite(m, n)``: side one ``0..m-1``, side two ``m..m+n-1``
* ``join(G, H, kind)``: ``v_i`` of ``G`` is ``i-1`` and ``w_j`` of ``H`` is
  ``n+j-1``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 63


class GraphError(ValueError):
    """Invalid argument to a graph operation."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("negative vertex count")
        if self.n > MAX_VERTICES:
            raise GraphError(f"graphs are capped at {MAX_VERTICES} vertices, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or (row >> v) & 1:
                raise GraphError(f"row {v} has a loop or an out-of-range bit")
            for u in bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise GraphError(f"adjacency is not symmetric at ({v}, {u})")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels must have one entry per vertex")

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> Graph:
        if n < 0:
            raise GraphError("negative vertex count")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls.from_edges(n, ())

    # queries ------------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def is_clique(self, mask: int) -> bool:
        return all((self.adj[v] | (1 << v)) & mask == mask for v in bits(mask))

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by least vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # derived graphs -----------------------------------------------------

    def induced(self, mask: int) -> Graph:
        """``G[S]`` re-indexed in increasing vertex order."""
        return self.delete_vertices(self.vertex_mask & ~mask)[0]

    def delete_vertices(self, mask: int) -> tuple[Graph, dict[int, int]]:
        """Return ``G - S`` and the old-to-new index map of the survivors."""
        keep = [v for v in range(self.n) if not (mask >> v) & 1]
        new_index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            r = 0
            for u in bits(self.adj[v] & ~mask):
                r |= 1 << new_index[u]
            rows.append(r)
        labels = tuple(self.labels[v] for v in keep) if self.labels is not None else None
        return Graph(len(keep), tuple(rows), labels), new_index

    def delete_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.adj)
        for u, v in edges:
            if not self.has_edge(u, v):
                raise GraphError(f"({u}, {v}) is not an edge")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows), self.labels)

    def edge_subgraph(self, edges: Iterable[tuple[int, int]]) -> Graph:
        """Spanning subgraph keeping only ``edges``."""
        rows = [0] * self.n
        for u, v in edges:
            if not self.has_edge(u, v):
                raise GraphError(f"({u}, {v}) is not an edge")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows), self.labels)

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.adj)), self.labels)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of the vertices")
        rows = [0] * self.n
        for v in range(self.n):
            r = 0
            for u in bits(self.adj[v]):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        labels = None
        if self.labels is not None:
            new = [""] * self.n
            for v in range(self.n):
                new[perm[v]] = self.labels[v]
            labels = tuple(new)
        return Graph(self.n, tuple(rows), labels)

    def with_labels(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self.n, self.adj, tuple(labels) if labels is not None else None)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# families ---------------------------------------------------------------


def _check_nonneg(*params: int) -> None:
    for p in params:
        if p < 0:
            raise GraphError(f"family parameters must be non-negative, got {p}")


def path(n: int) -> Graph:
    _check_nonneg(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _check_nonneg(n)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """``K_{1,n}`` with centre 0."""
    _check_nonneg(n)
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    _check_nonneg(m, n)
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def edgeless(n: int) -> Graph:
    """``S_n``: n vertices, no edges."""
    _check_nonneg(n)
    return Graph.empty(n)


FAMILIES = {
    "path": path,
    "complete": complete,
    "star": star,
    "complete_bipartite": complete_bipartite,
    "empty": edgeless,
    "cycle": cycle,
}


def make_family(kind: str, *params: int) -> Graph:
    try:
        builder = FAMILIES[kind]
    except KeyError:
        raise GraphError(f"unknown family {kind!r}; known: {', '.join(FAMILIES)}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise GraphError(f"wrong number of parameters for {kind}") from exc


# unions, quotients and joins ---------------------------------------------


def disjoint_union(G: Graph, H: Graph) -> Graph:
    rows = list(G.adj) + [r << G.n for r in H.adj]
    if G.labels is None and H.labels is None:
        labels = None
    else:
        labels = tuple(f"0:{G.label(v)}" for v in range(G.n)) + tuple(
            f"1:{H.label(v)}" for v in range(H.n)
        )
    return Graph(G.n + H.n, tuple(rows), labels)


def m_copies(H: Graph, m: int) -> Graph:
    """``mH``; copy ``i`` occupies indices ``i*|H| .. (i+1)*|H|-1``."""
    if m < 1:
        raise GraphError("need at least one copy")
    rows = []
    labels = []
    for i in range(m):
        rows.extend(r << (i * H.n) for r in H.adj)
        labels.extend(f"{i}:{H.label(v)}" for v in range(H.n))
    return Graph(m * H.n, tuple(rows), tuple(labels))


@dataclass(frozen=True)
class QuotientSpec:
    base: Graph
    copies: int
    glued: int  # vertex mask of A

    def validate(self) -> None:
        H, A = self.base, self.glued
        if self.copies < 1:
            raise GraphError("need at least one copy")
        if A & ~H.vertex_mask:
            raise GraphError("glued set is not a subset of V(H)")
        if A == H.vertex_mask:
            raise GraphError("glued set must be a proper subset of V(H)")
        if not H.is_independent(A):
            raise GraphError("glued set must be independent")


def quotient_family(spec: QuotientSpec) -> Graph:
    """``mH/A``: m copies of H with the copies of each vertex of A identified.

    Glued vertices come first (in increasing order of their index in H) and
    carry labels ``A:<v>``; copy ``i`` of a free vertex ``v`` is ``<i>:<v>``.
    """
    spec.validate()
    H, m, A = spec.base, spec.copies, spec.glued
    glued = list(bits(A))
    free = [v for v in range(H.n) if not (A >> v) & 1]
    index: dict[tuple[int, int], int] = {}
    labels = []
    for a in glued:
        idx = len(labels)
        labels.append(f"A:{H.label(a)}")
        for i in range(m):
            index[(i, a)] = idx
    for i in range(m):
        for v in free:
            index[(i, v)] = len(labels)
            labels.append(f"{i}:{H.label(v)}")
    edges = {
        tuple(sorted((index[(i, u)], index[(i, v)]))) for i in range(m) for u, v in H.edges()
    }
    return Graph.from_edges(len(labels), edges, labels)


JOIN_KINDS = ("mat", "antimat", "tri")


def join(G: Graph, H: Graph, kind: str) -> Graph:
    """Two equal-order graphs plus cross edges ``v_i w_j``.

    ``mat``: iff ``i == j``; ``antimat``: iff ``i != j``; ``tri``: iff ``i >= j``.
    """
    if G.n != H.n:
        raise GraphError(f"join needs equal orders, got {G.n} and {H.n}")
    if kind not in JOIN_KINDS:
        raise GraphError(f"unknown join kind {kind!r}")
    n = G.n
    rule = {
        "mat": lambda i, j: i == j,
        "antimat": lambda i, j: i != j,
        "tri": lambda i, j: i >= j,
    }[kind]
    edges = list(G.edges()) + [(n + u, n + v) for u, v in H.edges()]
    edges += [(i, n + j) for i in range(n) for j in range(n) if rule(i, j)]
    labels = [f"v{i + 1}" for i in range(n)] + [f"w{j + 1}" for j in range(n)]
    return Graph.from_edges(2 * n, edges, labels)


def random_graph(rng, n: int, p: float = 0.5, max_edges: int | None = None) -> Graph:
    """G(n, p) drawn with ``rng`` (a ``random.Random``); optionally keep at most
    ``max_edges`` edges, chosen uniformly among those drawn."""
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    if max_edges is not None and len(edges) > max_edges:
        edges = rng.sample(edges, max_edges)
    return Graph.from_edges(n, edges)

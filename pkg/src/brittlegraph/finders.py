"""Structure finders with checkable certificates.

Tutte bridges, sunflowers, monochromatic cliques, the three canonical
bipartite patterns, and the degree-or-induced-path dichotomy.  Every finder
has a matching ``check_*`` function that validates its output from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, bits, mask_of, popcount


# Tutte bridges ---------------------------------------------------------------


@dataclass(frozen=True)
class Bridge:
    vertices: int
    edges: frozenset[tuple[int, int]]
    attachments: int


def tutte_bridges(G: Graph, A: int) -> list[Bridge]:
    """Bridges of A: each edge inside A, and each component of ``G - A`` with its
    edges to A.  Edgeless components (isolated vertices outside A) carry no
    edges and are left out, so the bridges partition ``E(G)``."""
    A &= G.vertex_mask
    bridges = [
        Bridge(mask_of((u, v)), frozenset([(u, v)]), mask_of((u, v)))
        for u, v in G.edges()
        if (A >> u) & 1 and (A >> v) & 1
    ]
    rest = G.vertex_mask & ~A
    seen = 0
    for start in bits(rest):
        if (seen >> start) & 1:
            continue
        comp, stack = 1 << start, [start]
        while stack:
            x = stack.pop()
            for y in bits(G.adj[x] & rest & ~comp):
                comp |= 1 << y
                stack.append(y)
        seen |= comp
        edges = frozenset((min(x, y), max(x, y)) for x in bits(comp) for y in bits(G.adj[x]))
        if not edges:
            continue
        attach = 0
        for x in bits(comp):
            attach |= G.adj[x] & A
        bridges.append(Bridge(comp | attach, edges, attach))
    return bridges


def bridge_edge_classes(G: Graph, A: int) -> list[frozenset[tuple[int, int]]]:
    """Edge classes of the relation "joined by a walk with no internal vertex in A".

    Two edges are related when they share an end outside A; the classes are the
    transitive closure.  This is the second presentation of Tutte bridges.
    """
    edges = G.edges()
    parent = list(range(len(edges)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    at: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edges):
        for x in (u, v):
            if not (A >> x) & 1:
                at.setdefault(x, []).append(i)
    for incident in at.values():
        for i in incident[1:]:
            parent[find(i)] = find(incident[0])
    classes: dict[int, set] = {}
    for i, e in enumerate(edges):
        classes.setdefault(find(i), set()).add(e)
    return [frozenset(c) for c in classes.values()]


def delete_bridges(G: Graph, A: int, max_edges: int) -> Graph:
    """Remove every bridge of A with at most ``max_edges`` edges.

    A bridge goes with its edges and its vertices outside A; A is kept.  The
    result is re-indexed and keeps G's labels.
    """
    doomed_edges: set[tuple[int, int]] = set()
    doomed_vertices = 0
    for b in tutte_bridges(G, A):
        if len(b.edges) <= max_edges:
            doomed_edges |= b.edges
            doomed_vertices |= b.vertices & ~A
    return G.delete_edges(doomed_edges).delete_vertices(doomed_vertices)[0]


# sunflowers ---------------------------------------------------------------


def find_sunflower(F: Sequence[Iterable], p: int) -> tuple[frozenset, tuple[int, ...]] | None:
    """``p`` members of F whose pairwise intersections all equal one core.

    Cores are tried in the order ∅, then the distinct pairwise intersections by
    size; petals are chosen by backtracking over members containing the core.
    """
    sets = [frozenset(s) for s in F]
    if p <= 0:
        return frozenset(), ()
    if p == 1:
        return (sets[0], (0,)) if sets else None
    cores = {frozenset()} | {a & b for a, b in combinations(sets, 2)}
    for core in sorted(cores, key=lambda c: (len(c), sorted(map(repr, c)))):
        members = [i for i, s in enumerate(sets) if core <= s]
        chosen: list[int] = []

        def extend(start: int, used: frozenset) -> bool:
            if len(chosen) == p:
                return True
            for pos in range(start, len(members)):
                if len(members) - pos < p - len(chosen):
                    return False
                i = members[pos]
                petal = sets[i] - core
                if petal & used:
                    continue
                chosen.append(i)
                if extend(pos + 1, used | petal):
                    return True
                chosen.pop()
            return False

        if extend(0, frozenset()):
            return core, tuple(chosen)
    return None


def check_sunflower(F: Sequence[Iterable], core: Iterable, petals: Sequence[int], p: int) -> bool:
    sets = [frozenset(s) for s in F]
    core = frozenset(core)
    if len(petals) != p or len(set(petals)) != p:
        return False
    return all(sets[i] & sets[j] == core for i, j in combinations(petals, 2)) and (
        p != 1 or core == sets[petals[0]]
    )


# monochromatic cliques -------------------------------------------------------


@dataclass(frozen=True)
class EdgeColoring:
    """Colouring of the edges of ``K_N``; ``color(u, v)`` is in ``1..k``."""

    N: int
    colors: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        for u, v in combinations(range(self.N), 2):
            if (u, v) not in self.colors:
                raise ValueError(f"pair ({u}, {v}) has no colour")

    def color(self, u: int, v: int) -> int:
        return self.colors[(min(u, v), max(u, v))]

    def palette(self) -> list[int]:
        return sorted(set(self.colors.values()))

    def class_graph(self, c: int) -> Graph:
        return Graph.from_edges(self.N, [e for e, x in self.colors.items() if x == c])

    @classmethod
    def from_graph(cls, G: Graph) -> EdgeColoring:
        """Colour 1 on edges of G and colour 2 on non-edges."""
        return cls(G.n, {(u, v): 1 if G.has_edge(u, v) else 2 for u, v in combinations(range(G.n), 2)})


def _find_clique(G: Graph, size: int) -> int | None:
    def grow(clique: int, candidates: int, need: int) -> int | None:
        if need == 0:
            return clique
        if popcount(candidates) < need:
            return None
        for v in bits(candidates):
            candidates &= ~(1 << v)
            found = grow(clique | (1 << v), candidates & G.adj[v], need - 1)
            if found is not None:
                return found
        return None

    return grow(0, G.vertex_mask, size)


def find_mono_clique(c: EdgeColoring, n: int) -> tuple[int, int] | None:
    """``(vertex mask, colour)`` of a monochromatic ``K_n``, or None."""
    if n < 1:
        raise ValueError("clique size must be positive")
    if n == 1:
        return (1, (c.palette() or [1])[0]) if c.N else None
    for color in c.palette():
        found = _find_clique(c.class_graph(color), n)
        if found is not None:
            return found, color
    return None


def check_mono_clique(c: EdgeColoring, mask: int, color: int, n: int) -> bool:
    vs = list(bits(mask))
    return len(vs) == n and all(v < c.N for v in vs) and all(c.color(u, v) == color for u, v in combinations(vs, 2))


# bipartite patterns ------------------------------------------------------------

PATTERN_RULES = {
    "mat": lambda i, j: i == j,
    "tri": lambda i, j: i >= j,
    "antimat": lambda i, j: i != j,
}


def _pattern_search(G: Graph, S: list[int], T: list[int], n: int, rule) -> tuple[list[int], list[int]] | None:
    vs: list[int] = []
    ws: list[int] = []

    def fits(v: int, w: int) -> bool:
        k = len(vs)
        if G.has_edge(v, w) != rule(k, k):
            return False
        for i in range(k):
            if G.has_edge(v, ws[i]) != rule(k, i) or G.has_edge(vs[i], w) != rule(i, k):
                return False
        return True

    def extend() -> bool:
        if len(vs) == n:
            return True
        for v in S:
            if v in vs:
                continue
            for w in T:
                if w in ws or not fits(v, w):
                    continue
                vs.append(v)
                ws.append(w)
                if extend():
                    return True
                vs.pop()
                ws.pop()
        return False

    return (vs, ws) if extend() else None


def bipartite_trichotomy(G: Graph, S: int, T: int, n: int) -> tuple[list[int], list[int], str] | None:
    """Ordered ``v_1..v_n`` in S and ``w_1..w_n`` in T whose cross edges form
    one of the three canonical patterns (tried as mat, tri, antimat).

    Only edges between S and T are looked at.
    """
    if S & T:
        raise ValueError("S and T must be disjoint")
    Sl, Tl = list(bits(S)), list(bits(T))
    for kind, rule in PATTERN_RULES.items():
        found = _pattern_search(G, Sl, Tl, n, rule)
        if found is not None:
            return found[0], found[1], kind
    return None


def check_bipartite_pattern(G: Graph, vs: Sequence[int], ws: Sequence[int], kind: str) -> bool:
    rule = PATTERN_RULES[kind]
    if len(vs) != len(ws) or len(set(vs) | set(ws)) != 2 * len(vs):
        return False
    return all(G.has_edge(v, w) == rule(i, j) for i, v in enumerate(vs) for j, w in enumerate(ws))


def has_distinct_neighbourhoods(G: Graph, S: int, T: int) -> bool:
    """Whether vertices of S have pairwise distinct neighbourhoods in T, and vice versa."""
    left = [G.adj[v] & T for v in bits(S)]
    right = [G.adj[w] & S for w in bits(T)]
    return len(set(left)) == len(left) and len(set(right)) == len(right)


# degree or induced path -------------------------------------------------------


def degree_or_path_threshold(k: int, l: int) -> Fraction:
    """Order from which a connected graph must have a vertex of degree >= k or an
    induced path on l vertices (k > 3)."""
    if k <= 3:
        raise ValueError("threshold defined for k > 3")
    return Fraction(k - 1, k - 3) * (k - 2) ** (l - 2)


@dataclass(frozen=True)
class DegreeOrPath:
    kind: str  # "degree" or "path"
    vertices: tuple[int, ...]


def find_induced_path(G: Graph, l: int) -> list[int] | None:
    if l <= 0:
        return []
    path: list[int] = []

    def extend(forbidden: int) -> bool:
        if len(path) == l:
            return True
        last = path[-1]
        for u in bits(G.adj[last] & ~forbidden):
            blocked = forbidden | (1 << u) | G.adj[last]
            path.append(u)
            if extend(blocked):
                return True
            path.pop()
        return False

    for start in range(G.n):
        path.append(start)
        if extend(1 << start):
            return path
        path.pop()
    return None


def degree_or_path(G: Graph, k: int, l: int) -> DegreeOrPath | None:
    for v in range(G.n):
        if G.degree(v) >= k:
            return DegreeOrPath("degree", (v,))
    found = find_induced_path(G, l)
    return None if found is None else DegreeOrPath("path", tuple(found))


def check_degree_or_path(G: Graph, cert: DegreeOrPath, k: int, l: int) -> bool:
    if cert.kind == "degree":
        return len(cert.vertices) == 1 and G.degree(cert.vertices[0]) >= k
    vs = cert.vertices
    if len(vs) != l or len(set(vs)) != l:
        return False
    return all(G.has_edge(a, b) == (j - i == 1) for (i, a), (j, b) in combinations(enumerate(vs), 2))

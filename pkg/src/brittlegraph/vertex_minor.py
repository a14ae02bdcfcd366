"""Local complementation, pivoting, local-equivalence orbits and vertex-minors.

Operation words always name vertices by their index in the graph the word is
applied to first; deletions do not shift later references.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphError, bits, complete, edgeless, join, mask_of
from .iso import canonical_form, find_induced_embedding, is_isomorphic

DEFAULT_STATE_LIMIT = 2_000_000
CANONICAL_DEDUPE_FROM = 8


def state_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    return int(os.environ.get("BRITTLEGRAPH_STATE_LIMIT", DEFAULT_STATE_LIMIT))


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} not in a graph on {G.n} vertices")


def _lc_rows(rows: list[int], v: int) -> None:
    nbrs = rows[v]
    for u in bits(nbrs):
        rows[u] ^= nbrs & ~(1 << u)


def local_complement(G: Graph, v: int) -> Graph:
    """``G*v``: complement the subgraph induced on the neighbourhood of v."""
    _check_vertex(G, v)
    rows = list(G.adj)
    _lc_rows(rows, v)
    return Graph(G.n, tuple(rows), G.labels)


def pivot(G: Graph, u: int, v: int) -> Graph:
    """``G∧uv`` by the three-class flip, followed by swapping u and v.

    With ``Nu = N(u) - N[v]``, ``Nv = N(v) - N[u]`` and ``C = N(u) ∩ N(v)``,
    adjacency is toggled between every pair of vertices lying in two different
    classes; afterwards u takes v's row and v takes u's.
    """
    _check_vertex(G, u)
    _check_vertex(G, v)
    if not G.has_edge(u, v):
        raise GraphError(f"pivot needs an edge, ({u}, {v}) is not one")
    uv = (1 << u) | (1 << v)
    nu, nv = G.adj[u] & ~uv, G.adj[v] & ~uv
    classes = (nu & ~nv, nv & ~nu, nu & nv)
    rows = list(G.adj)
    for i, cls in enumerate(classes):
        others = 0
        for j, other in enumerate(classes):
            if j != i:
                others |= other
        for x in bits(cls):
            rows[x] ^= others
    perm = list(range(G.n))
    perm[u], perm[v] = v, u
    return Graph(G.n, tuple(rows), G.labels).relabel(perm).with_labels(G.labels)


# words ---------------------------------------------------------------------


@dataclass(frozen=True)
class LCWord:
    """Sequence of ``("lc", v)``, ``("pv", u, v)`` and ``("del", v)`` steps."""

    ops: tuple[tuple, ...] = ()

    def __post_init__(self) -> None:
        for op in self.ops:
            arity = {"lc": 1, "pv": 2, "del": 1}.get(op[0])
            if arity is None or len(op) != arity + 1:
                raise ValueError(f"malformed step {op!r}")

    def __str__(self) -> str:
        return "; ".join(" ".join(str(x) for x in op) for op in self.ops)

    def __len__(self) -> int:
        return len(self.ops)

    def __add__(self, other: LCWord) -> LCWord:
        return LCWord(self.ops + other.ops)

    def render(self, G: Graph) -> str:
        """Text form with vertex labels of G in place of indices."""
        return "; ".join(" ".join([op[0], *(G.label(v) for v in op[1:])]) for op in self.ops)

    @property
    def deletions(self) -> int:
        return sum(1 for op in self.ops if op[0] == "del")

    @classmethod
    def parse(cls, text: str, G: Graph | None = None) -> LCWord:
        """Inverse of ``str``; tokens may be labels of G instead of indices."""
        ops = []
        for chunk in text.split(";"):
            tokens = chunk.split()
            if not tokens:
                continue
            name, *args = tokens
            ops.append((name, *(_resolve(tok, G) for tok in args)))
        return cls(tuple(ops))


def _resolve(token: str, G: Graph | None) -> int:
    if token.lstrip("-").isdigit():
        return int(token)
    if G is None:
        raise ValueError(f"vertex label {token!r} needs a graph to resolve")
    return G.index_of(token)


def lc(*vs: int) -> LCWord:
    return LCWord(tuple(("lc", v) for v in vs))


def delete(*vs: int) -> LCWord:
    return LCWord(tuple(("del", v) for v in vs))


def pv(u: int, v: int) -> LCWord:
    return LCWord((("pv", u, v),))


def apply_word(G: Graph, word: LCWord) -> Graph:
    """Run ``word`` on G; the result is re-indexed over the surviving vertices."""
    rows = list(G.adj)
    alive = G.vertex_mask
    for op in word.ops:
        for v in op[1:]:
            if not 0 <= v < G.n or not (alive >> v) & 1:
                raise GraphError(f"step {' '.join(map(str, op))} names a missing vertex")
        if op[0] == "lc":
            _lc_rows(rows, op[1])
        elif op[0] == "pv":
            current = Graph(G.n, tuple(rows))
            rows = list(pivot(current, op[1], op[2]).adj)
        else:
            v = op[1]
            for u in bits(rows[v]):
                rows[u] &= ~(1 << v)
            rows[v] = 0
            alive &= ~(1 << v)
    return Graph(G.n, tuple(rows), G.labels).induced(alive)


# orbits and containment ----------------------------------------------------


@dataclass
class OrbitHandle:
    """Local-equivalence class of ``seed`` explored breadth first.

    ``states`` maps a dedupe key to ``(graph, word)`` where ``apply_word(seed,
    word) == graph``.  Keys are exact adjacency tuples, or canonical forms
    when ``canonical`` is set.
    """

    seed: Graph
    limit: int
    canonical: bool
    states: dict = field(default_factory=dict)
    frontier: deque = field(default_factory=deque)
    limit_hit: bool = False

    def key(self, G: Graph):
        return canonical_form(G) if self.canonical else G.adj

    def add(self, G: Graph, word: LCWord) -> bool:
        k = self.key(G)
        if k in self.states:
            return False
        if len(self.states) >= self.limit:
            self.limit_hit = True
            return False
        self.states[k] = (G, word)
        self.frontier.append(k)
        return True

    def expand(self):
        """Yield newly discovered ``(graph, word)`` pairs until closed or truncated."""
        while self.frontier:
            G, word = self.states[self.frontier.popleft()]
            for v in range(G.n):
                if not G.adj[v]:
                    continue
                H = local_complement(G, v)
                w = word + lc(v)
                if self.add(H, w):
                    yield H, w
                elif self.limit_hit:
                    return

    @property
    def closed(self) -> bool:
        return not self.frontier and not self.limit_hit

    def graphs(self) -> list[Graph]:
        return [g for g, _ in self.states.values()]

    def find_isomorphic(self, H: Graph) -> tuple[Graph, LCWord] | None:
        for g, w in self.states.values():
            if is_isomorphic(g, H):
                return g, w
        return None


def orbit(G: Graph, limit: int | None = None, canonical: bool | None = None) -> OrbitHandle:
    """Close G under local complementation (up to ``limit`` states)."""
    if canonical is None:
        canonical = G.n >= CANONICAL_DEDUPE_FROM
    handle = OrbitHandle(G, state_limit(limit), canonical)
    handle.add(G, LCWord())
    for _ in handle.expand():
        pass
    return handle


@dataclass(frozen=True)
class VertexMinorResult:
    status: str  # "found", "absent" or "inconclusive"
    word: LCWord | None
    states: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def has_vertex_minor(G: Graph, H: Graph, limit: int | None = None) -> VertexMinorResult:
    """Search the local-equivalence class of G for an induced copy of H.

    Local complementation at v commutes with deleting any other vertex, so every
    vertex-minor is an induced subgraph of a locally equivalent graph.  The
    returned word is local complementations followed by deletions.
    """
    if H.n > G.n:
        return VertexMinorResult("absent", None, 0)
    handle = OrbitHandle(G, state_limit(limit), G.n >= CANONICAL_DEDUPE_FROM)

    def witness(g: Graph, word: LCWord) -> LCWord | None:
        emb = find_induced_embedding(g, H)
        if emb is None:
            return None
        keep = mask_of(emb.values())
        return word + delete(*(v for v in range(g.n) if not (keep >> v) & 1))

    handle.add(G, LCWord())
    found = witness(G, LCWord())
    if found is None:
        for g, w in handle.expand():
            found = witness(g, w)
            if found is not None:
                break
    if found is not None:
        return VertexMinorResult("found", found, len(handle.states))
    status = "inconclusive" if handle.limit_hit else "absent"
    return VertexMinorResult(status, None, len(handle.states))


def check_vertex_minor_word(G: Graph, H: Graph, word: LCWord) -> bool:
    """Independent check that ``word`` turns G into a graph isomorphic to H."""
    try:
        return is_isomorphic(apply_word(G, word), H)
    except GraphError:
        return False


# constructions -------------------------------------------------------------


@dataclass(frozen=True)
class Construction:
    """A graph, an operation word on it and the graph the word must produce.

    ``stages`` lists ``(prefix length, expected graph)`` checkpoints; the last
    one covers the full word.
    """

    name: str
    n: int
    graph: Graph
    word: LCWord
    target: Graph
    stages: tuple[tuple[int, Graph], ...]

    def run(self, upto: int | None = None) -> Graph:
        ops = self.word.ops if upto is None else self.word.ops[:upto]
        return apply_word(self.graph, LCWord(ops))

    def check(self) -> bool:
        return all(is_isomorphic(self.run(k), expected) for k, expected in self.stages)


CONSTRUCTION_THRESHOLDS = {
    "mat_ks": 2,
    "mat_kk": 3,
    "antimat_ss": 3,
    "antimat_ks": 3,
    "antimat_kk": 2,
    "tri_kk": 2,
}


def construction(name: str, n: int) -> Construction:
    """Explicit vertex-minor words taking joins of cliques and edgeless graphs
    to perfect matchings (or, for ``tri_kk``, to a half graph of an edgeless
    graph against a clique, which is locally equivalent to a path)."""
    if name not in CONSTRUCTION_THRESHOLDS:
        raise ValueError(f"unknown construction {name!r}; known: {', '.join(CONSTRUCTION_THRESHOLDS)}")
    if n < CONSTRUCTION_THRESHOLDS[name]:
        raise ValueError(f"{name} needs n >= {CONSTRUCTION_THRESHOLDS[name]}, got {n}")

    def v(i: int) -> int:
        return i - 1

    def w(j: int) -> int:
        return n + j - 1

    K, S = complete, edgeless
    matching = lambda m: join(S(m), S(m), "mat")  # noqa: E731
    stages: list[tuple[int, Graph]] = []
    if name == "mat_ks":
        G, word, target = join(K(n), S(n), "mat"), delete(w(1)) + lc(v(1)) + delete(v(1)), matching(n - 1)
    elif name == "mat_kk":
        G = join(K(n), K(n), "mat")
        word = delete(v(1), w(2)) + lc(v(2), w(1)) + delete(v(2), w(1))
        target = matching(n - 2)
    elif name == "antimat_ss":
        G = join(S(n), S(n), "antimat")
        word = delete(v(1), w(2)) + pv(v(2), w(1)) + delete(v(2), w(1))
        target = matching(n - 2)
    elif name == "antimat_ks":
        G = join(K(n), S(n), "antimat")
        first = delete(w(1)) + lc(v(1)) + delete(v(1))
        # In the intermediate graph w2 lies on the clique side and v2 is its
        # matched partner, so the mat_ks word applies with the sides swapped.
        word = first + delete(v(2)) + lc(w(2)) + delete(w(2))
        stages.append((len(first), join(S(n - 1), K(n - 1), "mat")))
        target = matching(n - 2)
    elif name == "antimat_kk":
        G, word, target = join(K(n), K(n), "antimat"), delete(w(1)) + lc(v(1)) + delete(v(1)), matching(n - 1)
    else:
        G, word, target = join(K(n), K(n), "tri"), delete(w(1)) + lc(v(1)) + delete(v(1)), join(S(n - 1), K(n - 1), "tri")
    stages.append((len(word), target))
    return Construction(name, n, G, word, target, tuple(stages))


def random_word(rng, G: Graph, steps: int, deletions: int) -> LCWord:
    """Random local complementations with ``deletions`` deletions mixed in.

    At most ``n - 1`` deletions are made when there are lc steps, so every
    step has a vertex to act on.
    """
    alive = list(range(G.n))
    kinds = ["lc"] * steps + ["del"] * min(deletions, G.n - 1 if steps else G.n)
    rng.shuffle(kinds)
    ops = []
    for kind in kinds:
        v = rng.choice(alive)
        if kind == "del":
            alive.remove(v)
        ops.append((kind, v))
    return LCWord(tuple(ops))

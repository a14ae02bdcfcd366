"""Named, runnable checks of the structural statements the library implements.

Every claim takes a scale, ``"small"``, ``"medium"`` or an integer, and
returns a :class:`Report`.  What the scale means is listed per claim in
``CLAIMS``; ``small`` keeps ``verify all`` to well under a minute.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .bounds import BoundParams, bound_ell, edge_bound, matching_bound, vertex_bound
from .brittleness import (
    SearchLimitError,
    brittleness,
    brittleness_at_least,
    brittleness_naive,
    deletion_monotonicity_check,
)
from .connectivity import ConnFn, cutrank
from .finders import (
    EdgeColoring,
    bipartite_trichotomy,
    bridge_edge_classes,
    check_bipartite_pattern,
    check_degree_or_path,
    check_mono_clique,
    check_sunflower,
    degree_or_path,
    degree_or_path_threshold,
    delete_bridges,
    find_mono_clique,
    find_sunflower,
    tutte_bridges,
)
from .formats import emit_graph6, emit_sparse6, parse_graph6, parse_sparse6
from .gf2 import gf2_rank
from .graph import (
    Graph,
    QuotientSpec,
    bits,
    complete,
    cycle,
    edgeless,
    join,
    m_copies,
    path,
    quotient_family,
    random_graph,
    star,
)
from .iso import is_isomorphic, nonisomorphic_graphs
from .lrw import check_lrw_brittleness_bound
from .report import Report, stopwatch
from .vertex_minor import (
    CONSTRUCTION_THRESHOLDS,
    apply_word,
    construction,
    local_complement,
    orbit,
    pivot,
    random_word,
)

Scale = str | int
SEED = 20240521


def pick(scale: Scale, small, medium, explicit: Callable[[int], object] | None = None):
    if scale == "small":
        return small
    if scale == "medium":
        return medium
    if isinstance(scale, int):
        return explicit(scale) if explicit is not None else scale
    raise ValueError(f"scale must be small, medium or an integer, got {scale!r}")


def _g6(G: Graph) -> str:
    return emit_graph6(G).decode()


def connected_graphs_with_edges(e: int) -> list[Graph]:
    """Connected graphs with exactly e edges (up to isomorphism), no isolated vertices."""
    out = []
    for n in range(2, e + 2):
        for G in nonisomorphic_graphs(n):
            if G.num_edges() == e and G.is_connected():
                out.append(G)
    return out


def connected_graphs_on(n: int) -> list[Graph]:
    return [G for G in nonisomorphic_graphs(n) if G.is_connected()]


def independent_sets(H: Graph) -> list[int]:
    return [A for A in range(1 << H.n) if H.is_independent(A)]


# claims --------------------------------------------------------------------


def oracle_equivalence(scale: Scale) -> Report:
    top = pick(scale, 5, 6)
    checked = 0
    for n in range(top + 1):
        for G in nonisomorphic_graphs(n):
            for fn in ConnFn:
                for k in (1, 2, 3):
                    a = brittleness(fn, G, k, max_ground=15).value
                    b = brittleness_naive(fn, G, k, max_ground=15)
                    if a != b:
                        return Report("oracle-equivalence", {"n": n, "k": k, "fn": fn.value}, "fail",
                                      value=[a, b], witness={"graph6": _g6(G), "search": a, "naive": b})
                    checked += 1
    return Report("oracle-equivalence", {"max_n": top}, value=checked, witness={"instances": checked})


def pivot_identity(scale: Scale) -> Report:
    count = pick(scale, 100, 500)
    rng = random.Random(SEED)
    done = 0
    while done < count:
        G = random_graph(rng, rng.randint(2, 10), rng.random())
        if not G.num_edges():
            continue
        u, v = rng.choice(G.edges())
        direct = pivot(G, u, v)
        composed = local_complement(local_complement(local_complement(G, u), v), u)
        if direct != composed:
            return Report("pivot-identity", {"samples": count}, "fail",
                          witness={"graph6": _g6(G), "edge": [u, v]})
        done += 1
    return Report("pivot-identity", {"samples": count}, value=done, witness={"seed": SEED, "samples": done})


def lemma_loc(scale: Scale) -> Report:
    count = pick(scale, 100, 500)
    rng = random.Random(SEED + 1)
    for _ in range(count):
        G = random_graph(rng, rng.randint(1, 10), rng.random())
        H = G
        for v in (rng.randrange(G.n) for _ in range(rng.randint(1, 4))):
            H = local_complement(H, v)
            S = rng.getrandbits(G.n)
            if cutrank(G, S) != cutrank(H, S):
                return Report("lemma-loc", {"samples": count}, "fail",
                              witness={"graph6": _g6(G), "set": list(bits(S))})
    return Report("lemma-loc", {"samples": count}, value=count, witness={"seed": SEED + 1, "samples": count})


def lemma_etabase1(scale: Scale) -> Report:
    """``3H/A`` has vertex k-brittleness at least 2 (H connected with k+1 edges,
    A independent with ``H - A`` connected)."""
    max_k = pick(scale, 2, 3)
    instances = []
    for k in range(1, max_k + 1):
        for H in connected_graphs_with_edges(k + 1):
            for A in independent_sets(H):
                rest = H.delete_vertices(A)[0]
                if A == H.vertex_mask or not rest.is_connected():
                    continue
                G = quotient_family(QuotientSpec(H, 3, A))
                ok, counter = brittleness_at_least(ConnFn.VERTEX_CUT, G, k, 2, max_ground=15)
                record = {"H": _g6(H), "A": list(bits(A)), "k": k}
                if not ok:
                    record["partition"] = counter.as_lists()
                    return Report("lemma-etabase1", {"max_k": max_k}, "fail", witness=record)
                instances.append(record)
    return Report("lemma-etabase1", {"max_k": max_k, "l": 1}, value=len(instances), witness=instances)


def lemma_edgeforward1(scale: Scale) -> Report:
    """``nH`` has edge, matching and rank k-brittleness at least m+1 for n > 2m."""
    max_order = pick(scale, 4, 4)
    grid = [(3, 1)] + ([(5, 2)] if scale != "small" else [])
    instances = []
    for order in range(2, max_order + 1):
        k = order - 1
        for H in connected_graphs_on(order):
            for n, m in grid:
                G = m_copies(H, n)
                for fn in (ConnFn.EDGE_CUT, ConnFn.MATCHING_CUT, ConnFn.RANK_CUT):
                    ok, counter = brittleness_at_least(fn, G, k, m + 1, max_ground=20)
                    record = {"H": _g6(H), "n": n, "m": m, "k": k, "fn": fn.value}
                    if not ok:
                        record["partition"] = counter.as_lists()
                        return Report("lemma-edgeforward1", {"max_order": max_order}, "fail", witness=record)
                    instances.append(record)
    return Report("lemma-edgeforward1", {"max_order": max_order}, value=len(instances), witness=instances)


def lemma_edgeforward2(scale: Scale) -> Report:
    """Edge k-brittleness of ``K_{1,k+m}`` is at least m+1; in fact it equals m+1."""
    top = pick(scale, 6, 8)
    values = {}
    for total in range(2, top + 1):
        for k in range(1, total):
            m = total - k
            G = star(total)
            exact = brittleness(ConnFn.EDGE_CUT, G, k).value
            naive = brittleness_naive(ConnFn.EDGE_CUT, G, k)
            values[f"{k},{m}"] = exact
            if exact != naive or exact < m + 1:
                return Report("lemma-edgeforward2", {"k": k, "m": m}, "fail", value=[exact, naive],
                              witness={"search": exact, "naive": naive})
    return Report("lemma-edgeforward2", {"max_k_plus_m": top}, value=values, witness=values)


def lemma_removebridge(scale: Scale) -> Report:
    count = pick(scale, 40, 200)
    rng = random.Random(SEED + 2)
    for _ in range(count):
        G = random_graph(rng, rng.randint(1, 7), rng.random(), max_edges=12)
        A = rng.getrandbits(G.n)
        k = rng.randint(1, 2)
        H = delete_bridges(G, A, k)
        before = brittleness(ConnFn.VERTEX_CUT, G, k).value
        after = brittleness(ConnFn.VERTEX_CUT, H, k).value
        if after < before - bin(A).count("1"):
            return Report("lemma-removebridge", {"k": k}, "fail",
                          witness={"graph6": _g6(G), "A": list(bits(A)), "before": before, "after": after})
    return Report("lemma-removebridge", {"samples": count}, value=count, witness={"seed": SEED + 2, "samples": count})


TOMATCHING = {1: "mat_ks", 2: "mat_kk", 3: "antimat_ss", 4: "antimat_ks", 5: "antimat_kk"}


def _construction_claim(claim: str, name: str, scale: Scale) -> Report:
    low = CONSTRUCTION_THRESHOLDS[name]
    sizes = pick(scale, range(low, 6), range(low, 7), lambda n: [n])
    runs = []
    for n in sizes:
        c = construction(name, n)
        result = c.run()
        record = {"n": n, "graph6": _g6(c.graph), "word": str(c.word), "labelled": c.word.render(c.graph),
                  "result": _g6(result)}
        if not c.check():
            return Report(claim, {"n": n}, "fail", witness=record)
        runs.append(record)
    return Report(claim, {"n": list(sizes)}, value=len(runs), witness=runs)


def _path_orbit_claim(claim: str, left: Callable[[int], Graph], scale: Scale) -> Report:
    sizes = pick(scale, [2, 3], [2, 3, 4], lambda n: [n])
    runs = []
    for n in sizes:
        G = join(left(n), edgeless(n), "tri")
        handle = orbit(G)
        hit = handle.find_isomorphic(path(2 * n))
        if hit is None:
            status = "inconclusive" if handle.limit_hit else "fail"
            return Report(claim, {"n": n}, status, witness={"graph6": _g6(G), "states": len(handle.states)})
        runs.append({"n": n, "graph6": _g6(G), "word": str(hit[1]), "states": len(handle.states)})
    return Report(claim, {"n": list(sizes)}, value=len(runs), witness=runs)


def lemma_lengthonecase_3(scale: Scale) -> Report:
    sizes = pick(scale, [2, 3, 4], [2, 3, 4, 5], lambda n: [n])
    runs = []
    for n in sizes:
        c = construction("tri_kk", n)
        result = c.run()
        hit = orbit(result).find_isomorphic(path(2 * n - 2))
        record = {"n": n, "graph6": _g6(c.graph), "word": str(c.word), "labelled": c.word.render(c.graph)}
        if not c.check() or hit is None:
            return Report("lemma-lengthonecase-3", {"n": n}, "fail", witness=record)
        record["path_word"] = str(hit[1])
        runs.append(record)
    return Report("lemma-lengthonecase-3", {"n": list(sizes)}, value=len(runs), witness=runs)


def prop_inequality(scale: Scale) -> Report:
    top = pick(scale, 5, 6)
    checked = 0
    for n in range(1, top + 1):
        for G in nonisomorphic_graphs(n):
            for k in (1, 2, 3):
                r = check_lrw_brittleness_bound(G, k)
                if not r.passed:
                    return Report("prop-inequality", {"n": n, "k": k}, "fail",
                                  witness={"graph6": _g6(G), "lrw": r.lrw, "beta": r.brittleness,
                                           "layout": list(r.block_layout), "layout_width": r.block_layout_width})
                checked += 1
    return Report("prop-inequality", {"max_n": top}, value=checked, witness={"instances": checked})


def prop_submodularity(scale: Scale) -> Report:
    count = pick(scale, 200, 1000)
    rng = random.Random(SEED + 3)
    for _ in range(count):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        rows = [rng.getrandbits(c) for _ in range(r)]
        X1, X2, Y1, Y2 = (rng.getrandbits(r), rng.getrandbits(r), rng.getrandbits(c), rng.getrandbits(c))

        def rk(X: int, Y: int) -> int:
            return gf2_rank(rows[i] & Y for i in bits(X))

        if rk(X1, Y1) + rk(X2, Y2) < rk(X1 & X2, Y1 | Y2) + rk(X1 | X2, Y1 & Y2):
            return Report("prop-submodularity", {}, "fail", witness={"rows": rows, "sets": [X1, X2, Y1, Y2]})
    return Report("prop-submodularity", {"samples": count}, value=count, witness={"seed": SEED + 3, "samples": count})


def prop_vmbrittle(scale: Scale) -> Report:
    count = pick(scale, 40, 200)
    rng = random.Random(SEED + 4)
    for _ in range(count):
        G = random_graph(rng, rng.randint(2, 7), rng.random())
        word = random_word(rng, G, rng.randint(0, 5), rng.randint(0, min(3, G.n - 1)))
        H = apply_word(G, word)
        k = rng.randint(1, 3)
        d = G.n - H.n
        bg = brittleness(ConnFn.RANK_CUT, G, k).value
        bh = brittleness(ConnFn.RANK_CUT, H, k).value
        if bg > bh + d:
            return Report("prop-vmbrittle", {"k": k}, "fail",
                          witness={"graph6": _g6(G), "word": str(word), "beta_G": bg, "beta_H": bh})
    return Report("prop-vmbrittle", {"samples": count}, value=count, witness={"seed": SEED + 4, "samples": count})


def lemma_delmat(scale: Scale) -> Report:
    count = pick(scale, 40, 200)
    rng = random.Random(SEED + 5)
    for _ in range(count):
        G = random_graph(rng, rng.randint(1, 8), rng.random())
        report = deletion_monotonicity_check(G, rng.randrange(G.n), rng.randint(1, 3))
        if not report.passed:
            report.witness = {"graph6": _g6(G), **report.witness}
            return report
    return Report("lemma-delmat", {"samples": count}, value=count, witness={"seed": SEED + 5, "samples": count})


def bounds_claim(scale: Scale) -> Report:
    expected = {
        "vertex(1,2)": (bound_ell("vertex", BoundParams(1, 2)), 256 * 2**4),
        "edge(1,3)": (bound_ell("edge", BoundParams(1, 3)), 3 * 2),
        "matching(2,3)": (bound_ell("matching", BoundParams(2, 3)), 3**2 * 2),
        "edge(2,3)": (edge_bound(2, 3), edge_bound(1, 4 * 2 * 4 + 1)),
        "vertex(2,1)": (vertex_bound(2, 1), vertex_bound(1, 36)),
        "matching(3,1)": (matching_bound(3, 1), 0),
    }
    ok = all(a == b for a, b in expected.values())
    values = {key: a for key, (a, _) in expected.items()}
    return Report("bounds", {}, "pass" if ok else "fail", value=values, witness=values)


def graph6_roundtrip(scale: Scale) -> Report:
    top = pick(scale, 4, 5)
    checked = 0
    for n in range(top + 1):
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        for mask in range(1 << len(pairs)):
            G = Graph.from_edges(n, [p for b, p in enumerate(pairs) if (mask >> b) & 1])
            g6, s6 = emit_graph6(G), emit_sparse6(G)
            if parse_graph6(g6) != G or emit_graph6(parse_graph6(g6)) != g6 or parse_sparse6(s6) != G:
                return Report("graph6-roundtrip", {"n": n}, "fail", witness={"graph6": g6.decode()})
            checked += 1
    return Report("graph6-roundtrip", {"max_n": top}, value=checked, witness={"graphs": checked})


def sunflower_claim(scale: Scale) -> Report:
    """Nine distinct 2-sets (more than ``2!·(3-1)^2``) always hold a 3-petal sunflower."""
    count = pick(scale, 100, 1000)
    rng = random.Random(SEED + 6)
    pairs = list(itertools.combinations(range(8), 2))
    for _ in range(count):
        F = [set(p) for p in rng.sample(pairs, 9)]
        found = find_sunflower(F, 3)
        if found is None or not check_sunflower(F, found[0], found[1], 3):
            return Report("sunflower", {}, "fail", witness={"family": [sorted(s) for s in F]})
    return Report("sunflower", {"samples": count}, value=count, witness={"seed": SEED + 6, "samples": count})


def ramsey_claim(scale: Scale) -> Report:
    """Every 2-colouring of ``K_6`` has a monochromatic triangle; the pentagon
    colouring of ``K_5`` has none."""
    pairs = list(itertools.combinations(range(6), 2))
    count = pick(scale, 2000, 1 << 15)
    rng = random.Random(SEED + 7)
    masks = range(1 << 15) if count >= 1 << 15 else (rng.getrandbits(15) for _ in range(count))
    for mask in masks:
        c = EdgeColoring(6, {p: 1 + ((mask >> i) & 1) for i, p in enumerate(pairs)})
        found = find_mono_clique(c, 3)
        if found is None or not check_mono_clique(c, found[0], found[1], 3):
            return Report("ramsey", {}, "fail", witness={"coloring": mask})
    if find_mono_clique(EdgeColoring.from_graph(cycle(5)), 3) is not None:
        return Report("ramsey", {}, "fail", witness={"pentagon": "found a monochromatic triangle"})
    return Report("ramsey", {"samples": count}, value=count, witness={"seed": SEED + 7, "samples": count})


def prop_binary(scale: Scale) -> Report:
    """Connected graphs above the threshold have a vertex of degree >= k or an induced path on l vertices."""
    count = pick(scale, 50, 300)
    rng = random.Random(SEED + 8)
    done = 0
    while done < count:
        k, l = rng.choice([(4, 3), (4, 4), (5, 3)])
        n = int(-(-degree_or_path_threshold(k, l) // 1))
        G = random_graph(rng, n + rng.randint(0, 2), rng.uniform(0.1, 0.5))
        if not G.is_connected():
            continue
        cert = degree_or_path(G, k, l)
        if cert is None or not check_degree_or_path(G, cert, k, l):
            return Report("prop-binary", {"k": k, "l": l}, "fail", witness={"graph6": _g6(G)})
        done += 1
    return Report("prop-binary", {"samples": count}, value=done, witness={"seed": SEED + 8, "samples": done})


def _pattern_brute_force(G: Graph, S: list[int], T: list[int], n: int, kind: str) -> bool:
    return any(
        check_bipartite_pattern(G, vs, ws, kind)
        for vs in itertools.permutations(S, n)
        for ws in itertools.permutations(T, n)
    )


def thm_trichotomy(scale: Scale) -> Report:
    """The pattern finder agrees with brute force on random bipartite graphs."""
    count = pick(scale, 30, 200)
    rng = random.Random(SEED + 9)
    for _ in range(count):
        a, b, n = rng.randint(2, 4), rng.randint(2, 4), rng.randint(2, 3)
        edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < 0.5]
        G = Graph.from_edges(a + b, edges)
        S, T = (1 << a) - 1, ((1 << b) - 1) << a
        found = bipartite_trichotomy(G, S, T, n)
        truth = {kind: _pattern_brute_force(G, list(range(a)), list(range(a, a + b)), n, kind)
                 for kind in ("mat", "tri", "antimat")}
        if found is None:
            ok = not any(truth.values())
        else:
            ok = check_bipartite_pattern(G, found[0], found[1], found[2])
        if not ok:
            return Report("thm-trichotomy", {"n": n}, "fail", witness={"graph6": _g6(G), "truth": truth})
    return Report("thm-trichotomy", {"samples": count}, value=count, witness={"seed": SEED + 9, "samples": count})


def bridges_claim(scale: Scale) -> Report:
    """Tutte bridges partition the edges and agree with the edge-equivalence classes."""
    top = pick(scale, 5, 6)
    checked = 0
    for n in range(top + 1):
        for G in nonisomorphic_graphs(n):
            for A in range(1 << n):
                bridges = tutte_bridges(G, A)
                edge_sets = [b.edges for b in bridges]
                union = [e for s in edge_sets for e in s]
                if sorted(union) != G.edges() or set(edge_sets) != set(bridge_edge_classes(G, A)):
                    return Report("bridges", {"n": n}, "fail", witness={"graph6": _g6(G), "A": list(bits(A))})
                checked += 1
    return Report("bridges", {"max_n": top}, value=checked, witness={"instances": checked})


@dataclass(frozen=True)
class Claim:
    id: str
    summary: str
    scales: str
    run: Callable[[Scale], Report]


CLAIMS: dict[str, Claim] = {}


def _register(cid: str, summary: str, scales: str, fn: Callable[[Scale], Report]) -> None:
    CLAIMS[cid] = Claim(cid, summary, scales, fn)


_register("oracle-equivalence", "branch and bound equals exhaustive enumeration", "small n<=5, medium n<=6", oracle_equivalence)
_register("pivot-identity", "direct pivot equals *u*v*u", "small 100, medium 500 samples", pivot_identity)
_register("lemma-loc", "cut-rank is invariant under local complementation", "small 100, medium 500", lemma_loc)
_register("lemma-etabase1", "vertex k-brittleness of 3H/A is at least 2", "small k<=2, medium k<=3", lemma_etabase1)
_register("lemma-edgeforward1", "nH has edge/matching/rank k-brittleness >= m+1", "small |H|<=4 n=3, medium |H|<=4 n=3,5", lemma_edgeforward1)
_register("lemma-edgeforward2", "K_{1,k+m} has edge k-brittleness m+1", "small k+m<=6, medium k+m<=8", lemma_edgeforward2)
_register("lemma-removebridge", "deleting small bridges costs at most |A|", "small 40, medium 200", lemma_removebridge)
for _i, _name in TOMATCHING.items():
    _register(f"lemma-tomatching-{_i}", f"construction {_name} yields a matching",
              "small n<=5, medium n<=6, integer = that n",
              lambda scale, _c=f"lemma-tomatching-{_i}", _n=_name: _construction_claim(_c, _n, scale))
_register("lemma-lengthonecase-1", "S_n tri S_n is locally equivalent to P_2n", "small n<=3, medium n<=4",
          lambda scale: _path_orbit_claim("lemma-lengthonecase-1", edgeless, scale))
_register("lemma-lengthonecase-2", "K_n tri S_n is locally equivalent to P_2n", "small n<=3, medium n<=4",
          lambda scale: _path_orbit_claim("lemma-lengthonecase-2", complete, scale))
_register("lemma-lengthonecase-3", "K_n tri K_n has a P_{2n-2} vertex-minor", "small n<=4, medium n<=5", lemma_lengthonecase_3)
_register("prop-inequality", "lrw <= beta_k^rho + floor(k/2)", "small n<=5, medium n<=6", prop_inequality)
_register("prop-submodularity", "GF(2) rank is submodular", "small 200, medium 1000", prop_submodularity)
_register("prop-vmbrittle", "vertex-minor rank brittleness monotonicity", "small 40, medium 200", prop_vmbrittle)
_register("lemma-delmat", "deleting a vertex lowers nu/rho brittleness by at most 1", "small 40, medium 200", lemma_delmat)
_register("bounds", "explicit threshold formulas", "fixed", bounds_claim)
_register("graph6-roundtrip", "graph6 and sparse6 round trip", "small n<=4, medium n<=5", graph6_roundtrip)
_register("sunflower", "nine 2-sets contain a 3-petal sunflower", "small 100, medium 1000", sunflower_claim)
_register("ramsey", "R(3;2) = 6 witnesses", "small 2000 colourings, medium all", ramsey_claim)
_register("prop-binary", "degree or induced path above the threshold", "small 50, medium 300", prop_binary)
_register("thm-trichotomy", "bipartite pattern finder matches brute force", "small 30, medium 200", thm_trichotomy)
_register("bridges", "Tutte bridge presentations coincide", "small n<=5, medium n<=6", bridges_claim)


def run_claim(cid: str, scale: Scale = "small") -> Report:
    if cid not in CLAIMS:
        raise KeyError(cid)
    with stopwatch() as sw:
        try:
            report = CLAIMS[cid].run(scale)
        except SearchLimitError as exc:
            report = Report(cid, {"scale": scale}, "inconclusive", detail=str(exc))
    report.elapsed_ms = sw.elapsed_ms
    report.params.setdefault("scale", scale)
    return report

"""Compiled value tables for the brittleness search.

``prefix_table(fn, G, i)[S]`` is the connectivity function restricted to the
first ``i`` ground elements, for every ``S`` inside that prefix.  These are
the same numbers :func:`connectivity.restricted_function` gives one at a time;
the tests hold the two routes against each other.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .connectivity import ConnFn, _incidence, edge_index
from .graph import Graph


@njit(cache=True)
def _popcount(x: np.int64) -> np.int64:
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _low_index(x: np.int64) -> np.int64:
    c = 0
    while not (x >> c) & 1:
        c += 1
    return c


@njit(cache=True)
def _eta_table(adj: np.ndarray, i: int) -> np.ndarray:
    D = (np.int64(1) << i) - 1
    out = np.zeros(1 << i, dtype=np.int16)
    for S in range(1 << i):
        rest = D & ~S
        total = 0
        x = S
        while x:
            v = _low_index(x)
            x &= x - 1
            total += _popcount(adj[v] & rest)
        out[S] = total
    return out


@njit(cache=True)
def _rho_table(adj: np.ndarray, i: int) -> np.ndarray:
    D = (np.int64(1) << i) - 1
    out = np.zeros(1 << i, dtype=np.int16)
    basis = np.zeros(64, dtype=np.int64)
    for S in range(1 << i):
        rest = D & ~S
        basis[:] = 0
        rank = 0
        x = S
        while x:
            v = _low_index(x)
            x &= x - 1
            row = adj[v] & rest
            while row:
                p = _low_index(row)
                if basis[p] == 0:
                    basis[p] = row
                    rank += 1
                    break
                row ^= basis[p]
        out[S] = rank
    return out


@njit(cache=True)
def _nu_table(adj: np.ndarray, i: int) -> np.ndarray:
    D = (np.int64(1) << i) - 1
    out = np.zeros(1 << i, dtype=np.int16)
    match_l = np.empty(64, dtype=np.int64)
    match_r = np.empty(64, dtype=np.int64)
    prev = np.empty(64, dtype=np.int64)
    queue = np.empty(64, dtype=np.int64)
    for S in range(1 << i):
        rest = D & ~S
        match_l[:] = -1
        match_r[:] = -1
        size = 0
        x = S
        while x:
            u = _low_index(x)
            x &= x - 1
            if not adj[u] & rest:
                continue
            # breadth-first search for an augmenting path from u
            head, tail = 0, 1
            queue[0] = u
            seen = np.int64(0)
            found = -1
            while head < tail and found < 0:
                a = queue[head]
                head += 1
                cand = adj[a] & rest & ~seen
                while cand:
                    w = _low_index(cand)
                    cand &= cand - 1
                    seen |= np.int64(1) << w
                    prev[w] = a
                    if match_r[w] < 0:
                        found = w
                        break
                    queue[tail] = match_r[w]
                    tail += 1
            if found < 0:
                continue
            w = found
            while True:
                a = prev[w]
                nxt = match_l[a]
                match_l[a] = w
                match_r[w] = a
                if a == u:
                    break
                w = nxt
            size += 1
        out[S] = size
    return out


@njit(cache=True)
def _kappa_table(inc: np.ndarray, i: int) -> np.ndarray:
    D = (np.int64(1) << i) - 1
    out = np.zeros(1 << i, dtype=np.int16)
    for S in range(1 << i):
        rest = D & ~S
        total = 0
        for r in inc:
            if r & S and r & rest:
                total += 1
        out[S] = total
    return out


def table_inputs(fn: ConnFn, G: Graph) -> np.ndarray:
    if fn.on_edges:
        return np.array([r for r in _incidence(G, edge_index(G)) if r], dtype=np.int64)
    return np.array(G.adj, dtype=np.int64)


def prefix_table(fn: ConnFn, G: Graph, i: int, data: np.ndarray | None = None) -> np.ndarray:
    if data is None:
        data = table_inputs(fn, G)
    kernel = {
        ConnFn.VERTEX_CUT: _kappa_table,
        ConnFn.EDGE_CUT: _eta_table,
        ConnFn.MATCHING_CUT: _nu_table,
        ConnFn.RANK_CUT: _rho_table,
    }[fn]
    return kernel(data, i)

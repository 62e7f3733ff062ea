"""Brute-force reference computations, independent of the package's algorithms."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import numpy as np


def simple_adj(g) -> dict[int, set[int]]:
    return {v: set(g.neighbors(v)) for v in g.vertices()}


def floyd_warshall(g) -> tuple[list[int], np.ndarray]:
    vs = g.vertices()
    pos = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    d = np.full((n, n), math.inf)
    np.fill_diagonal(d, 0)
    for u, v, _m in g.edges():
        d[pos[u], pos[v]] = d[pos[v], pos[u]] = 1
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return vs, d


def all_shortest_paths(adj: dict[int, set[int]], s: int, t: int) -> list[list[int]]:
    """Every simple s-t path of minimum length, by exhaustive DFS."""
    found: list[list[int]] = []
    best = [math.inf]

    def dfs(path: list[int]) -> None:
        if len(path) - 1 > best[0]:
            return
        u = path[-1]
        if u == t:
            if len(path) - 1 < best[0]:
                best[0] = len(path) - 1
                found.clear()
            found.append(list(path))
            return
        for w in sorted(adj[u]):
            if w not in path:
                path.append(w)
                dfs(path)
                path.pop()

    dfs([s])
    return found


def brute_betweenness(g) -> dict[int, Fraction]:
    """Sum over unordered pairs of the fraction of geodesics through each interior vertex."""
    adj = simple_adj(g)
    out = {v: Fraction(0) for v in adj}
    for s, t in combinations(sorted(adj), 2):
        paths = all_shortest_paths(adj, s, t)
        if not paths:
            continue
        for v in adj:
            if v in (s, t):
                continue
            through = sum(1 for p in paths if v in p)
            out[v] += Fraction(through, len(paths))
    return out


def brute_edge_betweenness(g) -> dict[tuple[int, int], Fraction]:
    adj = simple_adj(g)
    out = {(u, v): Fraction(0) for u, v, _m in g.edges()}
    for s, t in combinations(sorted(adj), 2):
        paths = all_shortest_paths(adj, s, t)
        for p in paths:
            for a, b in zip(p, p[1:]):
                out[(min(a, b), max(a, b))] += Fraction(1, len(paths))
    return out


def brute_clique_number(g) -> int:
    """Largest vertex subset that is pairwise adjacent, over all 2^n subsets."""
    vs = g.vertices()
    n = len(vs)
    pos = {v: i for i, v in enumerate(vs)}
    nb = [0] * n
    for u, v, _m in g.edges():
        nb[pos[u]] |= 1 << pos[v]
        nb[pos[v]] |= 1 << pos[u]
    is_clique = bytearray(1 << n)
    is_clique[0] = 1
    best = 0
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        if is_clique[rest] and (nb[low] & rest) == rest:
            is_clique[mask] = 1
            best = max(best, bin(mask).count("1"))
    return best


def brute_modularity(g, labels: dict[int, int]) -> float:
    vs = g.vertices()
    m = g.edge_total
    q = 0.0
    for i in vs:
        for j in vs:
            if labels[i] == labels[j]:
                q += g.multiplicity(i, j) - g.degree(i) * g.degree(j) / (2 * m)
    return q / (2 * m)


def brute_transitivity(g) -> float:
    adj = simple_adj(g)
    tri = sum(1 for a, b, c in combinations(sorted(adj), 3) if b in adj[a] and c in adj[a] and c in adj[b])
    triples = sum(len(n) * (len(n) - 1) // 2 for n in adj.values())
    return 3 * tri / triples if triples else 0.0

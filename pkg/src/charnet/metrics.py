"""Structural and centrality measures.

Anything built on shortest paths (distances, diameter, betweenness,
closeness, clustering, cliques) reads the simple view and ignores
multiplicities. Degree, assortativity and eigenvector centrality count
every interaction.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from ._brandes import all_alive, bfs_levels, brandes_csr
from .graph import GraphError, MultiGraph

__all__ = [
    "GeodesicTable",
    "VertexScores",
    "DisconnectedError",
    "ConvergenceError",
    "geodesics",
    "distance_matrix",
    "mean_geodesic",
    "closeness",
    "closeness_centrality",
    "betweenness",
    "betweenness_centrality",
    "normalized_degree",
    "degree_centrality",
    "diameter",
    "clustering_coefficient",
    "maximal_cliques",
    "clique_number",
    "degree_assortativity",
    "eigenvector_centrality",
    "degree_histogram",
]


class DisconnectedError(GraphError):
    pass


class ConvergenceError(ArithmeticError):
    pass


@dataclass
class GeodesicTable:
    source: int
    dist: dict[int, float]
    sigma: dict[int, int]
    predecessors: dict[int, list[int]] = field(default_factory=dict)


@dataclass
class VertexScores:
    measure: str
    values: dict[int, float]
    normalized: bool = False

    def ranked(self) -> list[tuple[int, float]]:
        """Descending by value, ties by vertex id."""
        return sorted(self.values.items(), key=lambda kv: (-kv[1], kv[0]))

    def __getitem__(self, v: int) -> float:
        return self.values[v]


def geodesics(g: MultiGraph, source: int | str) -> GeodesicTable:
    """BFS distances and shortest-path counts from ``source``.

    Unreachable vertices get ``inf`` distance and zero paths.
    """
    s = g.vertex(source)
    view = g.simple()
    dist: dict[int, float] = {v: math.inf for v in g.vertices()}
    sigma = {v: 0 for v in dist}
    preds: dict[int, list[int]] = {v: [] for v in dist}
    dist[s], sigma[s] = 0, 1
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in sorted(view.neighbors(v)):
            if dist[w] == math.inf:
                dist[w] = dist[v] + 1
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return GeodesicTable(s, dist, sigma, preds)


def distance_matrix(g: MultiGraph) -> tuple[list[int], np.ndarray]:
    """All-pairs hop distances in :meth:`MultiGraph.index` order; -1 if unreachable."""
    vs, _ = g.index()
    indptr, indices, _w = g.csr()
    alive = all_alive(indices)
    d = np.empty((len(vs), len(vs)), dtype=np.int64)
    for i in range(len(vs)):
        d[i] = bfs_levels(indptr, indices, alive, i)
    return vs, d


def _distance_sum(g: MultiGraph, v: int | str, restrict_to_component: bool) -> tuple[int, int]:
    """Sum of distances from ``v`` and the vertex count it is taken over."""
    table = geodesics(g, v)
    finite = [d for d in table.dist.values() if d != math.inf]
    if len(finite) < g.order and not restrict_to_component:
        raise DisconnectedError(
            f"{g.label(table.source)!r} cannot reach {g.order - len(finite)} vertices; "
            "pass restrict_to_component=True to use its component only"
        )
    return int(sum(finite)), len(finite)


def mean_geodesic(g: MultiGraph, v: int | str, restrict_to_component: bool = False) -> float:
    """Mean distance from ``v`` with divisor N (the zero self-distance included)."""
    total, n = _distance_sum(g, v, restrict_to_component)
    return total / n


def closeness(
    g: MultiGraph,
    v: int | str,
    conventional: bool = False,
    restrict_to_component: bool = False,
) -> float:
    """``N / sum(d)`` by default; ``(N - 1) / sum(d)`` if ``conventional``."""
    total, n = _distance_sum(g, v, restrict_to_component)
    if total == 0:
        raise GraphError("closeness undefined for an isolated vertex")
    return (n - 1 if conventional else n) / total


def closeness_centrality(
    g: MultiGraph, conventional: bool = False, restrict_to_component: bool = False
) -> VertexScores:
    vs, d = distance_matrix(g)
    out = {}
    for i, v in enumerate(vs):
        reach = d[i][d[i] >= 0]
        if len(reach) < len(vs) and not restrict_to_component:
            raise DisconnectedError(f"{g.label(v)!r} cannot reach every vertex")
        total = int(reach.sum())
        if total == 0:
            raise GraphError(f"closeness undefined for isolated vertex {g.label(v)!r}")
        out[v] = (len(reach) - 1 if conventional else len(reach)) / total
    return VertexScores("closeness", out, normalized=True)


def betweenness_centrality(g: MultiGraph, normalized: bool = True) -> VertexScores:
    """Brandes betweenness over unordered pairs; normalized by ``(N-1)(N-2)/2``."""
    n = g.order
    if normalized and n < 3:
        raise GraphError("normalized betweenness needs at least 3 vertices")
    vs, _ = g.index()
    if n == 0:
        return VertexScores("betweenness", {}, normalized)
    indptr, indices, _w = g.csr()
    vb, _eb = brandes_csr(indptr, indices, all_alive(indices), np.arange(n, dtype=np.int64))
    vb = vb / 2.0
    if normalized:
        vb = vb / ((n - 1) * (n - 2) / 2.0)
    return VertexScores("betweenness", {v: float(vb[i]) for i, v in enumerate(vs)}, normalized)


def betweenness(g: MultiGraph, v: int | str, normalized: bool = False) -> float:
    return betweenness_centrality(g, normalized)[g.vertex(v)]


def normalized_degree(g: MultiGraph, v: int | str) -> float:
    """Multiplicity-counting degree over ``N - 1``; exceeds 1 on multigraphs."""
    if g.order < 2:
        raise GraphError("normalized degree needs at least 2 vertices")
    return g.degree(v) / (g.order - 1)


def degree_centrality(g: MultiGraph, normalized: bool = True) -> VertexScores:
    if normalized and g.order < 2:
        raise GraphError("normalized degree needs at least 2 vertices")
    scale = 1.0 / (g.order - 1) if normalized else 1.0
    return VertexScores("degree", {v: g.degree(v) * scale for v in g.vertices()}, normalized)


def diameter(g: MultiGraph, require_connected: bool = False) -> int:
    """Largest finite distance over all pairs."""
    if g.order == 0:
        raise GraphError("diameter of an empty graph")
    _vs, d = distance_matrix(g)
    if require_connected and (d < 0).any():
        raise DisconnectedError("graph is disconnected")
    return int(d.max())


def clustering_coefficient(g: MultiGraph, variant: str = "transitivity") -> float:
    """Global transitivity (default) or mean local clustering (``variant="local"``).

    The local mean averages over vertices with at least two neighbours.
    """
    view = g.simple()
    closed = triples = 0
    local = []
    for v in view.vertices():
        nb = sorted(view.neighbors(v))
        k = len(nb)
        if k < 2:
            continue
        links = sum(1 for i, a in enumerate(nb) for b in nb[i + 1:] if b in view.neighbors(a))
        pairs = k * (k - 1) // 2
        closed += links
        triples += pairs
        local.append(links / pairs)
    if variant == "transitivity":
        return closed / triples if triples else 0.0
    if variant == "local":
        return float(np.mean(local)) if local else 0.0
    raise ValueError(f"unknown clustering variant {variant!r}")


def maximal_cliques(g: MultiGraph) -> Iterator[list[int]]:
    """Bron-Kerbosch with Tomita pivoting on the simple view."""
    view = g.simple()
    adj = {v: view.neighbors(v) for v in view.vertices()}

    def expand(r: list[int], p: set[int], x: set[int]) -> Iterator[list[int]]:
        if not p and not x:
            yield sorted(r)
            return
        pivot = max(p | x, key=lambda u: (len(adj[u] & p), -u))
        for v in sorted(p - adj[pivot]):
            yield from expand(r + [v], p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    yield from expand([], set(adj), set())


def clique_number(g: MultiGraph) -> int:
    if g.order == 0:
        raise GraphError("clique number of an empty graph")
    return max(len(c) for c in maximal_cliques(g))


def degree_assortativity(g: MultiGraph) -> float:
    """Pearson correlation of endpoint degrees, each edge weighted by multiplicity."""
    deg = {v: g.degree(v) for v in g.vertices()}
    x, y, w = [], [], []
    for u, v, m in g.edges():
        x += [deg[u], deg[v]]
        y += [deg[v], deg[u]]
        w += [m, m]
    if len(w) < 4:
        raise GraphError("assortativity needs at least two edges")
    x, y, w = np.asarray(x, float), np.asarray(y, float), np.asarray(w, float)
    w = w / w.sum()
    mean = float(w @ x)
    var = float(w @ (x - mean) ** 2)
    if var <= 1e-12 * max(mean * mean, 1.0):
        raise GraphError("assortativity undefined: endpoint degrees are constant")
    return float(w @ ((x - mean) * (y - mean))) / var


def eigenvector_centrality(
    g: MultiGraph,
    per_component: bool = False,
    tol: float = 1e-10,
    max_iter: int = 10000,
) -> VertexScores:
    """Principal eigenvector of the weighted adjacency, max entry scaled to 1.

    Iterates with ``A + I`` so bipartite graphs converge too; the shift does
    not change eigenvectors.
    """
    comps = g.components()
    if len(comps) > 1 and not per_component:
        raise DisconnectedError("graph is disconnected; pass per_component=True")
    out: dict[int, float] = {}
    for comp in comps:
        sub = g.induced(comp)
        a = sub.adjacency_matrix() + np.eye(len(comp))
        x = np.ones(len(comp))
        for _ in range(max_iter):
            nxt = a @ x
            nxt /= nxt.max()
            if np.abs(nxt - x).max() < tol:
                x = nxt
                break
            x = nxt
        else:
            raise ConvergenceError(f"eigenvector centrality did not converge in {max_iter} iterations")
        out.update(zip(sub.vertices(), map(float, x)))
    return VertexScores("eigenvector", dict(sorted(out.items())), normalized=True)


def degree_histogram(g: MultiGraph, bounds: Sequence[int]) -> list[float]:
    """Fraction of vertices per half-open degree bucket.

    ``bounds = [10, 100]`` gives buckets ``[0,10) [10,100) [100,inf)``.
    """
    bounds = list(bounds)
    if any(b >= c for b, c in zip(bounds, bounds[1:])):
        raise ValueError("bucket bounds must be strictly increasing")
    counts = [0] * (len(bounds) + 1)
    for v in g.vertices():
        counts[int(np.searchsorted(bounds, g.degree(v), side="right"))] += 1
    n = g.order
    return [c / n for c in counts] if n else [0.0] * len(counts)

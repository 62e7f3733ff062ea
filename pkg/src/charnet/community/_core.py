from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import GraphError, MultiGraph, Partition


@dataclass
class Dendrogram:
    """Partitions recorded by a hierarchical method, with modularity at each level.

    Agglomerative methods start from their finest partition; divisive ones
    start from the connected components and refine.
    """

    levels: list[Partition] = field(default_factory=list)
    modularity: list[float] = field(default_factory=list)

    def append(self, p: Partition, q: float) -> None:
        self.levels.append(p)
        self.modularity.append(q)

    def __len__(self) -> int:
        return len(self.levels)

    def best_index(self) -> int:
        """First level of maximal modularity."""
        if not self.levels:
            raise GraphError("empty dendrogram")
        best = max(self.modularity)
        return self.modularity.index(best)

    def best(self) -> Partition:
        return self.levels[self.best_index()]


def modularity(g: MultiGraph, p: Partition, resolution: float = 1.0) -> float:
    """Newman-Girvan modularity with multiplicities as edge weights."""
    m = g.edge_total
    if m == 0:
        raise GraphError("modularity undefined on a graph without edges")
    if not p.covers(g):
        raise GraphError("partition does not cover the graph's vertices")
    internal = [0.0] * p.k
    total = [0.0] * p.k
    for u, v, w in g.edges():
        if p[u] == p[v]:
            internal[p[u]] += w
    for v in g.vertices():
        total[p[v]] += g.degree(v)
    return sum(i / m - resolution * (t / (2.0 * m)) ** 2 for i, t in zip(internal, total))


def split_disconnected(g: MultiGraph, labels: dict[int, int]) -> dict[int, tuple[int, int]]:
    """Relabel so that every community induces a connected subgraph."""
    out: dict[int, tuple[int, int]] = {}
    for s in g.vertices():
        if s in out:
            continue
        out[s] = (labels[s], s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in out and labels[w] == labels[s]:
                    out[w] = (labels[s], s)
                    stack.append(w)
    return out


def require_edges(g: MultiGraph) -> None:
    if g.edge_total == 0:
        raise GraphError("community detection needs at least one edge")

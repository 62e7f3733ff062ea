"""Pons-Latapy random-walk agglomeration."""

from __future__ import annotations

import heapq

import numpy as np

from ..graph import GraphError, MultiGraph, Partition
from ._core import Dendrogram, require_edges

__all__ = ["walktrap"]


def walktrap(g: MultiGraph, walk_length: int = 4) -> Dendrogram:
    """Merge adjacent communities by smallest increase in mean squared walk distance.

    Each vertex gets a self-loop weighing its mean incident multiplicity
    (1 when isolated), which makes the walk aperiodic without depending on
    the overall weight scale. Level 0 is all singletons; every merge adds a
    level. Ties go to the lowest pair of community ids. Only adjacent
    communities merge, so components stay apart.
    """
    require_edges(g)
    if walk_length < 1:
        raise GraphError("walk_length must be >= 1")
    verts, pos = g.index()
    n = len(verts)
    a = g.adjacency_matrix()
    nbrs = (a > 0).sum(axis=1)
    loops = np.where(nbrs > 0, a.sum(axis=1) / np.maximum(nbrs, 1), 1.0)
    aw = a + np.diag(loops)
    d = aw.sum(axis=1)
    pt = np.linalg.matrix_power(aw / d[:, None], walk_length)
    x = pt / np.sqrt(d)[None, :]

    m = float(g.edge_total)
    deg = a.sum(axis=1)
    size = {i: 1 for i in range(n)}
    vec = {i: x[i] for i in range(n)}
    members = {i: [i] for i in range(n)}
    internal = {i: 0.0 for i in range(n)}
    total = {i: float(deg[i]) for i in range(n)}
    between: dict[int, dict[int, float]] = {i: {} for i in range(n)}
    for u, v, w in g.edges():
        between[pos[u]][pos[v]] = float(w)
        between[pos[v]][pos[u]] = float(w)

    def cost(c1: int, c2: int) -> float:
        diff = vec[c1] - vec[c2]
        return size[c1] * size[c2] / (size[c1] + size[c2]) * float(diff @ diff) / n

    heap = []
    for c1 in range(n):
        for c2 in between[c1]:
            if c1 < c2:
                heap.append((cost(c1, c2), c1, c2))
    heapq.heapify(heap)

    labels = list(range(n))
    q = sum(-(t / (2 * m)) ** 2 for t in total.values())
    out = Dendrogram()
    out.append(Partition.from_labels({verts[i]: i for i in range(n)}), q)
    next_id = n
    while heap:
        _c, c1, c2 = heapq.heappop(heap)
        if c1 not in size or c2 not in size:
            continue
        new = next_id
        next_id += 1
        w12 = between[c1].get(c2, 0.0)
        q += w12 / m - 2 * total[c1] * total[c2] / (2 * m) ** 2
        size[new] = size[c1] + size[c2]
        vec[new] = (size[c1] * vec[c1] + size[c2] * vec[c2]) / size[new]
        members[new] = members[c1] + members[c2]
        internal[new] = internal[c1] + internal[c2] + w12
        total[new] = total[c1] + total[c2]
        merged: dict[int, float] = {}
        for old in (c1, c2):
            for c, w in between.pop(old).items():
                if c not in (c1, c2):
                    merged[c] = merged.get(c, 0.0) + w
                    del between[c][old]
            for table in (size, vec, members, internal, total):
                del table[old]
        between[new] = merged
        for c, w in merged.items():
            between[c][new] = w
            heapq.heappush(heap, (cost(c, new), min(c, new), max(c, new)))
        for i in members[new]:
            labels[i] = new
        out.append(Partition.from_labels({verts[i]: labels[i] for i in range(n)}), q)
    return out

"""Divisive clustering by repeated removal of the highest-betweenness edge."""

from __future__ import annotations

import numpy as np

from .._brandes import bfs_levels, brandes_csr
from ..graph import MultiGraph, Partition
from ._core import Dendrogram, modularity, require_edges

__all__ = ["girvan_newman", "edge_betweenness"]


def _edge_slots(indptr: np.ndarray, indices: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """For each undirected edge ``u < v``: endpoints and both CSR slots."""
    us, vs, fwd, back = [], [], [], []
    slot = {}
    for u in range(len(indptr) - 1):
        for j in range(indptr[u], indptr[u + 1]):
            slot[(u, int(indices[j]))] = j
    for (u, v), j in sorted(slot.items()):
        if u < v:
            us.append(u)
            vs.append(v)
            fwd.append(j)
            back.append(slot[(v, u)])
    return np.array(us), np.array(vs), np.array(fwd), np.array(back)


def edge_betweenness(g: MultiGraph) -> dict[tuple[int, int], float]:
    """Edge betweenness on the simple view, over unordered vertex pairs."""
    verts, _ = g.index()
    indptr, indices, _w = g.csr()
    alive = np.ones(len(indices), dtype=np.bool_)
    _vb, eb = brandes_csr(indptr, indices, alive, np.arange(len(verts), dtype=np.int64))
    us, vs, fwd, back = _edge_slots(indptr, indices)
    score = (eb[fwd] + eb[back]) / 2.0
    return {(verts[u], verts[v]): float(s) for u, v, s in zip(us, vs, score)}


def girvan_newman(g: MultiGraph, max_levels: int | None = None) -> Dendrogram:
    """Remove edges by descending betweenness, recomputed after every removal.

    Level 0 is the connected components; a level is recorded each time a
    removal splits a component. Equal scores (to 1e-9 relative) go to the
    edge with the lowest vertex ids. ``max_levels`` caps the number of
    recorded splits.
    """
    require_edges(g)
    verts, _ = g.index()
    n = len(verts)
    indptr, indices, _w = g.csr()
    alive = np.ones(len(indices), dtype=np.bool_)
    us, vs, fwd, back = _edge_slots(indptr, indices)
    edge_alive = np.ones(len(us), dtype=np.bool_)

    comp = np.full(n, -1, dtype=np.int64)
    for s in range(n):
        if comp[s] < 0:
            comp[bfs_levels(indptr, indices, alive, s) >= 0] = s

    def snapshot() -> Partition:
        return Partition.from_labels({verts[i]: int(comp[i]) for i in range(n)})

    out = Dendrogram()
    p = snapshot()
    out.append(p, modularity(g, p))

    eb = np.zeros(len(indices))
    stale = set(int(c) for c in comp)
    while edge_alive.any() and (max_levels is None or len(out) - 1 < max_levels):
        for c in stale:
            members = np.flatnonzero(comp == c)
            rows = np.concatenate([np.arange(indptr[i], indptr[i + 1]) for i in members])
            eb[rows] = 0.0
            _vb, part = brandes_csr(indptr, indices, alive, members.astype(np.int64))
            eb[rows] = part[rows]
        score = np.where(edge_alive, eb[fwd] + eb[back], -np.inf)
        top = score.max()
        e = int(np.flatnonzero(score >= top - 1e-9 * max(1.0, abs(top)))[0])
        u, v = int(us[e]), int(vs[e])
        edge_alive[e] = False
        alive[fwd[e]] = alive[back[e]] = False
        old = int(comp[u])
        reach = bfs_levels(indptr, indices, alive, u) >= 0
        if reach[v]:
            stale = {old}
            continue
        # v's side becomes a new component labelled by its smallest member
        side = np.flatnonzero((comp == old) & ~reach)
        comp[side] = side.min()
        comp[np.flatnonzero(reach)] = np.flatnonzero(reach).min()
        stale = {int(comp[u]), int(comp[v])}
        p = snapshot()
        out.append(p, modularity(g, p))
    return out

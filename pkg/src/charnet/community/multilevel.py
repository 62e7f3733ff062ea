"""Louvain modularity optimisation."""

from __future__ import annotations

import random

from ..graph import MultiGraph, Partition
from ._core import Dendrogram, modularity, require_edges, split_disconnected

__all__ = ["multilevel", "multilevel_hierarchy"]


def _local_moves(
    adj: list[dict[int, float]],
    k: list[float],
    two_m: float,
    comm: list[int],
    order: list[int],
    allow_isolate: bool = False,
) -> bool:
    """Sweep ``order`` repeatedly, moving nodes to the best neighbouring community.

    ``adj[i]`` excludes self-loops; ``k`` includes them. Mutates ``comm`` and
    returns whether anything moved.
    """
    tot: dict[int, float] = {}
    for i, c in enumerate(comm):
        tot[c] = tot.get(c, 0.0) + k[i]
    fresh = max(comm) + 1
    moved_any = False
    while True:
        moved = False
        for i in order:
            ci = comm[i]
            ki = k[i]
            if ki == 0:
                continue
            links: dict[int, float] = {}
            for j, w in adj[i].items():
                links[comm[j]] = links.get(comm[j], 0.0) + w
            tot[ci] -= ki
            best_c = ci
            best = links.get(ci, 0.0) - tot[ci] * ki / two_m
            eps = 1e-12 * ki
            for c in sorted(links):
                gain = links[c] - tot.get(c, 0.0) * ki / two_m
                if gain > best + eps:
                    best_c, best = c, gain
            if allow_isolate and best < -eps:
                best_c, fresh = fresh, fresh + 1
            tot[best_c] = tot.get(best_c, 0.0) + ki
            if best_c != ci:
                comm[i] = best_c
                moved = moved_any = True
        if not moved:
            return moved_any


def multilevel_hierarchy(g: MultiGraph, seed: int = 0) -> Dendrogram:
    """Louvain levels followed by a vertex-level polish.

    Levels: one partition per coarsening step, then the final partition
    after splitting disconnected communities and re-running single-vertex
    moves on the original graph until neither changes anything.
    """
    require_edges(g)
    rng = random.Random(seed)
    vs, pos = g.index()
    n = len(vs)
    two_m = 2.0 * g.edge_total
    adj: list[dict[int, float]] = [{pos[w]: float(m) for w, m in g.neighbors(v).items()} for v in vs]
    k = [sum(a.values()) for a in adj]
    member = list(range(n))  # original index -> current node
    out = Dendrogram()

    while True:
        comm = list(range(len(adj)))
        order = list(range(len(adj)))
        rng.shuffle(order)
        if not _local_moves(adj, k, two_m, comm, order):
            break
        ids = {c: i for i, c in enumerate(sorted(set(comm)))}
        member = [ids[comm[node]] for node in member]
        new_adj: list[dict[int, float]] = [{} for _ in ids]
        new_k = [0.0] * len(ids)
        for i, nb in enumerate(adj):
            ci = ids[comm[i]]
            new_k[ci] += k[i]
            for j, w in nb.items():
                cj = ids[comm[j]]
                if ci != cj:
                    new_adj[ci][cj] = new_adj[ci].get(cj, 0.0) + w
        adj, k = new_adj, new_k
        p = Partition.from_labels({vs[i]: member[i] for i in range(n)})
        out.append(p, modularity(g, p))

    labels = {vs[i]: member[i] for i in range(n)}
    base_adj = [{pos[w]: float(m) for w, m in g.neighbors(v).items()} for v in vs]
    base_k = [sum(a.values()) for a in base_adj]
    while True:
        split = split_disconnected(g, labels)
        renum = {c: i for i, c in enumerate(sorted(set(split.values())))}
        did_split = len(renum) != len(set(labels.values()))
        comm = [renum[split[v]] for v in vs]
        order = list(range(n))
        rng.shuffle(order)
        moved = _local_moves(base_adj, base_k, two_m, comm, order, allow_isolate=True)
        labels = {vs[i]: comm[i] for i in range(n)}
        if not moved and not did_split:
            break
    p = Partition.from_labels(labels)
    q = modularity(g, p)
    if not out.levels or p.canonical() != out.levels[-1].canonical():
        out.append(p, q)
    return out


def multilevel(g: MultiGraph, seed: int = 0) -> Partition:
    return multilevel_hierarchy(g, seed).levels[-1]

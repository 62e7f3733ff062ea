"""Asynchronous label propagation with multiplicity-weighted support."""

from __future__ import annotations

import random

from ..graph import MultiGraph, Partition
from ..metrics import ConvergenceError
from ._core import require_edges, split_disconnected

__all__ = ["label_propagation", "best_labels"]


def best_labels(g: MultiGraph, labels: dict[int, int], v: int) -> list[int]:
    """Labels of maximal weighted support among ``v``'s neighbours, sorted."""
    support: dict[int, int] = {}
    for w, m in g.neighbors(v).items():
        support[labels[w]] = support.get(labels[w], 0) + m
    if not support:
        return [labels[v]]
    top = max(support.values())
    return sorted(c for c, s in support.items() if s == top)


def label_propagation(g: MultiGraph, seed: int = 0, max_sweeps: int = 10000) -> Partition:
    """Each vertex repeatedly adopts a label of maximal neighbour support.

    Vertices are visited in a fresh seeded order every sweep and ties are
    broken uniformly at random. Stops once every vertex already holds one of
    its maximal labels. Label classes that end up disconnected are split.
    """
    require_edges(g)
    rng = random.Random(seed)
    vs = g.vertices()
    labels = {v: v for v in vs}
    for _ in range(max_sweeps):
        if all(labels[v] in best_labels(g, labels, v) for v in vs):
            break
        order = list(vs)
        rng.shuffle(order)
        for v in order:
            cands = best_labels(g, labels, v)
            labels[v] = cands[0] if len(cands) == 1 else rng.choice(cands)
    else:
        raise ConvergenceError(f"label propagation did not settle in {max_sweeps} sweeps")
    return Partition.from_labels(split_disconnected(g, labels))

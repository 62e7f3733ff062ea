"""Partition similarity (NMI, adjusted Rand) and quality (mixing, embeddedness)."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .graph import GraphError, MultiGraph, Partition

__all__ = [
    "ConfusionTable",
    "confusion",
    "nmi",
    "adjusted_rand",
    "vertex_mixing",
    "mixing_parameter",
    "embeddedness",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConfusionTable:
    counts: np.ndarray  # counts[x, y] = |community x of p1 & community y of p2|

    @property
    def rows(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def cols(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    @property
    def n(self) -> int:
        return int(self.counts.sum())


def confusion(p1: Partition, p2: Partition) -> ConfusionTable:
    if set(p1.assignment) != set(p2.assignment):
        raise GraphError("partitions cover different vertex sets")
    counts = np.zeros((p1.k, p2.k), dtype=np.int64)
    for v, c in p1.assignment.items():
        counts[c, p2[v]] += 1
    return ConfusionTable(counts)


def _entropy(sizes: np.ndarray, n: int) -> float:
    p = sizes[sizes > 0] / n
    return float(-(p * np.log(p)).sum())


def nmi(p1: Partition, p2: Partition, normalization: str = "arithmetic") -> float:
    """Mutual information over the mean ("arithmetic"), "max" or "sqrt" of the entropies.

    Two single-community partitions score 1; if only one is trivial the
    mutual information is 0 and so is the score.
    """
    t = confusion(p1, p2)
    n = t.n
    h1, h2 = _entropy(t.rows, n), _entropy(t.cols, n)
    if h1 + h2 == 0.0:
        return 1.0
    nz = t.counts > 0
    pxy = t.counts[nz] / n
    px = (t.rows[:, None] * np.ones_like(t.counts))[nz] / n
    py = (np.ones_like(t.counts) * t.cols[None, :])[nz] / n
    mi = float((pxy * np.log(pxy / (px * py))).sum())
    if normalization == "arithmetic":
        denom = (h1 + h2) / 2.0
    elif normalization == "max":
        denom = max(h1, h2)
    elif normalization == "sqrt":
        denom = math.sqrt(h1 * h2)
    else:
        raise ValueError(f"unknown NMI normalization {normalization!r}")
    if denom == 0.0:
        return 0.0
    return min(max(mi / denom, 0.0), 1.0)


def _pairs(x: np.ndarray) -> float:
    x = x.astype(float)
    return float((x * (x - 1) / 2.0).sum())


def adjusted_rand(p1: Partition, p2: Partition) -> float:
    t = confusion(p1, p2)
    index = _pairs(t.counts)
    a, b = _pairs(t.rows), _pairs(t.cols)
    total = t.n * (t.n - 1) / 2.0
    expected = a * b / total if total else 0.0
    top = (a + b) / 2.0
    if top == expected:
        return 1.0 if p1.canonical() == p2.canonical() else 0.0
    return (index - expected) / (top - expected)


def vertex_mixing(g: MultiGraph, p: Partition) -> dict[int, float]:
    """External share of each non-isolated vertex's multiplicity degree."""
    if not p.covers(g):
        raise GraphError("partition does not cover the graph's vertices")
    out = {}
    for v in g.vertices():
        tot = ext = 0
        for w, m in g.neighbors(v).items():
            tot += m
            if p[w] != p[v]:
                ext += m
        if tot:
            out[v] = ext / tot
    return out


def mixing_parameter(g: MultiGraph, p: Partition) -> float:
    """Mean mixing parameter over vertices with at least one edge."""
    mu = vertex_mixing(g, p)
    if not mu:
        raise GraphError("every vertex is isolated")
    skipped = g.order - len(mu)
    if skipped:
        log.warning("mixing parameter: excluded %d isolated vertices", skipped)
    return float(np.mean(list(mu.values())))


def embeddedness(g: MultiGraph, p: Partition, community: int) -> float:
    """Internal degree (twice the internal multiplicity) over total degree of the community."""
    members = [v for v in g.vertices() if p[v] == community]
    if not members:
        raise GraphError(f"no community {community}")
    internal = total = 0
    for v in members:
        for w, m in g.neighbors(v).items():
            total += m
            if p[w] == community:
                internal += m
    if total == 0:
        raise GraphError(f"community {community} has no incident edges")
    return internal / total

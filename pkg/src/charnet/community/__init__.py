"""Community detection: five methods plus modularity scoring.

:func:`detect` runs any method by name and returns a single partition; for
the hierarchical methods that is the cut of maximal modularity.
"""

from __future__ import annotations

from ..graph import MultiGraph, Partition
from ._core import Dendrogram, modularity
from .girvan_newman import edge_betweenness, girvan_newman
from .label_propagation import label_propagation
from .leading_eigenvector import leading_eigenvector
from .multilevel import multilevel, multilevel_hierarchy
from .walktrap import walktrap

METHODS = ("multilevel", "label_propagation", "girvan_newman", "leading_eigenvector", "walktrap")

# methods whose result depends on the seed
SEEDED = frozenset({"multilevel", "label_propagation"})


def detect(g: MultiGraph, method: str, seed: int = 0, walk_length: int = 4, tol: float = 1e-9) -> Partition:
    if method == "multilevel":
        return multilevel(g, seed)
    if method == "label_propagation":
        return label_propagation(g, seed)
    if method == "girvan_newman":
        return girvan_newman(g).best()
    if method == "leading_eigenvector":
        return leading_eigenvector(g, tol=tol)
    if method == "walktrap":
        return walktrap(g, walk_length).best()
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


__all__ = [
    "Dendrogram",
    "METHODS",
    "SEEDED",
    "detect",
    "edge_betweenness",
    "girvan_newman",
    "label_propagation",
    "leading_eigenvector",
    "modularity",
    "multilevel",
    "multilevel_hierarchy",
    "walktrap",
]

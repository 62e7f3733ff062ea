"""Undirected labeled multigraph with multiplicity-weighted edges.

Vertex ids come from an :class:`Interner` that may be shared by many graphs,
so graphs sliced from the same corpus agree on ids and partitions of one can
be compared with partitions of another.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping

import numpy as np

__all__ = [
    "Interner",
    "MultiGraph",
    "SimpleView",
    "Partition",
    "GraphError",
    "SelfInteractionError",
    "UnknownVertexError",
    "normalize_name",
    "add_interaction",
    "merge",
    "degree",
    "edge_multiplicity",
]


class GraphError(ValueError):
    pass


class SelfInteractionError(GraphError):
    pass


class UnknownVertexError(GraphError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""


def normalize_name(name: str) -> str:
    """Trim and collapse internal whitespace; case is kept."""
    return " ".join(name.split())


class Interner:
    """Bijection between character names and dense integer ids."""

    def __init__(self, names: Iterable[str] = ()) -> None:
        self._ids: dict[str, int] = {}
        self._names: list[str] = []
        for n in names:
            self.intern(n)

    def intern(self, name: str) -> int:
        name = normalize_name(name)
        if not name:
            raise GraphError("empty character name")
        i = self._ids.get(name)
        if i is None:
            i = len(self._names)
            self._ids[name] = i
            self._names.append(name)
        return i

    def get(self, name: str) -> int | None:
        return self._ids.get(normalize_name(name))

    def name(self, i: int) -> str:
        return self._names[i]

    def __len__(self) -> int:
        return len(self._names)

    def __contains__(self, name: str) -> bool:
        return normalize_name(name) in self._ids


Vertex = "int | str"


class MultiGraph:
    """Undirected multigraph without self-loops.

    ``adjacency[u][v]`` is the number of recorded interactions between ``u``
    and ``v``. Graphs are built with :meth:`add_interaction` and treated as
    read-only afterwards.
    """

    def __init__(self, names: Interner | None = None) -> None:
        self.names = names if names is not None else Interner()
        self._adj: dict[int, dict[int, int]] = {}
        self.edge_total = 0

    # -- construction -----------------------------------------------------

    def add_vertex(self, name: str) -> int:
        v = self.names.intern(name)
        self._adj.setdefault(v, {})
        return v

    def add_interaction(self, a: str, b: str, count: int = 1, source: str | None = None) -> None:
        na, nb = normalize_name(a), normalize_name(b)
        if na == nb:
            where = f" ({source})" if source else ""
            raise SelfInteractionError(f"self-interaction of {na!r}{where}")
        if count < 1:
            raise GraphError(f"interaction count must be positive, got {count}")
        u, v = self.add_vertex(na), self.add_vertex(nb)
        self._adj[u][v] = self._adj[u].get(v, 0) + count
        self._adj[v][u] = self._adj[v].get(u, 0) + count
        self.edge_total += count

    # -- queries ----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: object) -> bool:
        return self._lookup(v) is not None

    def _lookup(self, v: object) -> int | None:
        if isinstance(v, str):
            i = self.names.get(v)
        elif isinstance(v, (int, np.integer)):
            i = int(v)
        else:
            return None
        return i if i is not None and i in self._adj else None

    def vertex(self, v: int | str) -> int:
        """Resolve a name or id to an id of this graph."""
        i = self._lookup(v)
        if i is None:
            raise UnknownVertexError(f"unknown vertex {v!r}")
        return i

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def label(self, v: int) -> str:
        return self.names.name(v)

    def labels(self) -> dict[int, str]:
        return {v: self.names.name(v) for v in self.vertices()}

    def neighbors(self, v: int | str) -> Mapping[int, int]:
        return self._adj[self.vertex(v)]

    def degree(self, v: int | str) -> int:
        return sum(self._adj[self.vertex(v)].values())

    def multiplicity(self, a: int | str, b: int | str) -> int:
        u, v = self._lookup(a), self._lookup(b)
        if u is None or v is None:
            return 0
        return self._adj[u].get(v, 0)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, multiplicity)`` once per adjacent pair, ``u < v``."""
        for u in self.vertices():
            for v in sorted(self._adj[u]):
                if u < v:
                    yield u, v, self._adj[u][v]

    def simple(self) -> "SimpleView":
        return SimpleView(self)

    def copy(self) -> "MultiGraph":
        g = MultiGraph(self.names)
        g._adj = {u: dict(nb) for u, nb in self._adj.items()}
        g.edge_total = self.edge_total
        return g

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest member."""
        seen: set[int] = set()
        out = []
        for s in self.vertices():
            if s in seen:
                continue
            seen.add(s)
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.order > 0 and len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> "MultiGraph":
        keep = {self.vertex(v) for v in vertices}
        g = MultiGraph(self.names)
        for u in sorted(keep):
            g._adj[u] = {w: m for w, m in self._adj[u].items() if w in keep}
        g.edge_total = sum(sum(nb.values()) for nb in g._adj.values()) // 2
        return g

    def index(self) -> tuple[list[int], dict[int, int]]:
        """Sorted vertex ids and their positions, for dense array work."""
        vs = self.vertices()
        return vs, {v: i for i, v in enumerate(vs)}

    def adjacency_matrix(self, simple: bool = False) -> np.ndarray:
        vs, pos = self.index()
        a = np.zeros((len(vs), len(vs)))
        for u, v, m in self.edges():
            a[pos[u], pos[v]] = a[pos[v], pos[u]] = 1 if simple else m
        return a

    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Simple-view CSR arrays ``(indptr, indices, weights)`` over :meth:`index` positions."""
        vs, pos = self.index()
        indptr = np.zeros(len(vs) + 1, dtype=np.int64)
        indices, weights = [], []
        for i, v in enumerate(vs):
            nb = sorted(pos[w] for w in self._adj[v])
            indices.extend(nb)
            weights.extend(self._adj[v][vs[j]] for j in nb)
            indptr[i + 1] = len(indices)
        return indptr, np.asarray(indices, dtype=np.int64), np.asarray(weights, dtype=np.float64)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return _by_name(self) == _by_name(other)

    def __repr__(self) -> str:
        return f"MultiGraph(order={self.order}, edge_total={self.edge_total})"


def _by_name(g: MultiGraph) -> tuple[frozenset, frozenset]:
    verts = frozenset(g.label(v) for v in g.vertices())
    edges = frozenset((frozenset((g.label(u), g.label(v))), m) for u, v, m in g.edges())
    return verts, edges


class SimpleView:
    """Read-only view of a multigraph with every multiplicity collapsed to 1."""

    def __init__(self, g: MultiGraph) -> None:
        self.parent = g
        self._adj = {u: frozenset(nb) for u, nb in g._adj.items()}

    @property
    def order(self) -> int:
        return len(self._adj)

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def neighbors(self, v: int | str) -> frozenset[int]:
        return self._adj[self.parent.vertex(v)]

    def degree(self, v: int | str) -> int:
        return len(self.neighbors(v))

    def adjacent(self, a: int | str, b: int | str) -> bool:
        return self.parent.multiplicity(a, b) >= 1

    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2


def add_interaction(g: MultiGraph, a: str, b: str, source: str | None = None) -> None:
    g.add_interaction(a, b, source=source)


def degree(g: MultiGraph, v: int | str) -> int:
    return g.degree(v)


def edge_multiplicity(g: MultiGraph, a: int | str, b: int | str) -> int:
    return g.multiplicity(a, b)


def merge(graphs: Iterable[MultiGraph]) -> MultiGraph:
    """Union of vertices by name with multiplicities summed.

    When every input shares one interner the result keeps it (and the ids);
    otherwise names are re-interned into a fresh table.
    """
    graphs = list(graphs)
    if not graphs:
        return MultiGraph()
    names = graphs[0].names
    shared = all(g.names is names for g in graphs)
    out = MultiGraph(names if shared else Interner())
    for g in graphs:
        for v in g.vertices():
            out.add_vertex(g.label(v))
        for u, v, m in g.edges():
            if shared:
                out._adj[u][v] = out._adj[u].get(v, 0) + m
                out._adj[v][u] = out._adj[v].get(u, 0) + m
                out.edge_total += m
            else:
                out.add_interaction(g.label(u), g.label(v), count=m)
    return out


@dataclass(frozen=True)
class Partition:
    """Assignment of every vertex to one community, ids ``0..k-1``.

    Community ids are numbered in order of each community's smallest vertex.
    """

    assignment: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        used = set(self.assignment.values())
        if used != set(range(len(used))):
            raise GraphError("community ids must be contiguous from 0")

    @classmethod
    def from_labels(cls, labels: Mapping[int, Hashable]) -> "Partition":
        relabel: dict[Hashable, int] = {}
        out = {}
        for v in sorted(labels):
            out[v] = relabel.setdefault(labels[v], len(relabel))
        return cls(out)

    @classmethod
    def from_communities(cls, communities: Iterable[Iterable[int]]) -> "Partition":
        labels: dict[int, int] = {}
        for c, members in enumerate(communities):
            for v in members:
                if v in labels:
                    raise GraphError(f"vertex {v} assigned twice")
                labels[v] = c
        return cls.from_labels(labels)

    @classmethod
    def singletons(cls, vertices: Iterable[int]) -> "Partition":
        return cls.from_labels({v: v for v in vertices})

    @classmethod
    def whole(cls, vertices: Iterable[int]) -> "Partition":
        return cls.from_labels({v: 0 for v in vertices})

    @property
    def k(self) -> int:
        return len(set(self.assignment.values()))

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def vertices(self) -> list[int]:
        return sorted(self.assignment)

    def communities(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v in self.vertices():
            out[self.assignment[v]].append(v)
        return out

    def covers(self, g: MultiGraph) -> bool:
        return set(self.assignment) == set(g.vertices())

    def canonical(self) -> frozenset[frozenset[int]]:
        """Label-free form, equal for partitions that differ only by relabeling."""
        return frozenset(frozenset(c) for c in self.communities())

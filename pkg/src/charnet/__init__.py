"""Character-interaction networks: multigraphs over episode slices, centrality,
community detection and partition comparison."""

from .graph import (
    GraphError,
    Interner,
    MultiGraph,
    Partition,
    SelfInteractionError,
    SimpleView,
    UnknownVertexError,
    add_interaction,
    degree,
    edge_multiplicity,
    merge,
)
from .ingest import Corpus, EpisodeKey, IngestError, SliceSpec, load_corpus, parse_file, slice_graph

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "EpisodeKey",
    "GraphError",
    "IngestError",
    "Interner",
    "MultiGraph",
    "Partition",
    "SelfInteractionError",
    "SimpleView",
    "SliceSpec",
    "UnknownVertexError",
    "add_interaction",
    "degree",
    "edge_multiplicity",
    "load_corpus",
    "merge",
    "parse_file",
    "slice_graph",
]

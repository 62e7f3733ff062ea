"""Report rows, run configuration, partition files and graph export.

Each ``cmd_*`` function returns a list of :class:`ReportRow`; :func:`render`
serialises rows with the run configuration as a header. Output contains no
timestamps, so the same configuration gives the same bytes.
"""

from __future__ import annotations

import csv
import io
import json
import xml.etree.ElementTree as ET
from dataclasses import asdict, dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from . import metrics
from .community import METHODS, SEEDED, detect, modularity
from .compare import adjusted_rand, embeddedness, mixing_parameter, nmi, vertex_mixing
from .graph import GraphError, MultiGraph, Partition
from .ingest import Corpus, IngestError, SliceSpec, load_corpus, slice_graph

__all__ = [
    "FRIENDS",
    "STANDARD_SLICES",
    "RunConfig",
    "ReportRow",
    "render",
    "cmd_stats",
    "cmd_centrality",
    "cmd_pairs",
    "cmd_communities",
    "cmd_compare",
    "cmd_export",
    "save_partition",
    "load_partition",
    "read_edge_csv",
]

FRIENDS = ("Monica", "Chandler", "Ross", "Rachel", "Joey", "Phoebe")

STANDARD_SLICES = (
    "AE", "s1-s4", "s5-s10", "firsts", "lasts", "thanksgiving", "flashbacks", "the6",
    "s1e1", "s10e18", "s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8", "s9", "s10",
)

MEASURES = ("degree", "closeness", "betweenness", "eigenvector")


@dataclass
class RunConfig:
    corpus: str = ""
    slices: str | None = None
    seed: int = 0
    walk_length: int = 4
    tol: float = 1e-9
    format: str = "csv"
    sep: str = "\t"
    normalized: bool = False
    closeness: str = "inverse-mean"  # N / sum of distances, or "conventional"
    clustering: str = "transitivity"  # or "local"
    nmi_normalization: str = "arithmetic"

    def load(self) -> Corpus:
        corpus = load_corpus(self.corpus, self.slices, self.sep)
        if not corpus.episodes:
            raise IngestError(f"no episode files in {self.corpus}")
        return corpus


@dataclass
class ReportRow:
    slice: str
    metric: str
    subject: str
    value: float | int | str
    corpus_hash: str = ""
    seed: int | None = None


def _value(v: object) -> object:
    return repr(v) if isinstance(v, float) else v


def render(rows: Sequence[ReportRow], config: RunConfig, corpus_hash: str, fmt: str = "csv") -> str:
    meta = {"config": asdict(config), "corpus_hash": corpus_hash}
    if fmt == "json":
        return json.dumps({"meta": meta, "rows": [asdict(r) for r in rows]}, indent=2, sort_keys=True) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown report format {fmt!r}")
    buf = io.StringIO()
    buf.write("# " + json.dumps(meta, sort_keys=True) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["slice", "metric", "subject", "value", "corpus_hash", "seed"])
    for r in rows:
        w.writerow([r.slice, r.metric, r.subject, _value(r.value), r.corpus_hash, "" if r.seed is None else r.seed])
    return buf.getvalue()


def _slices(names: Iterable[str]) -> list[str]:
    out: list[str] = []
    for s in names:
        out.extend(STANDARD_SLICES if s == "standard" else [s])
    return out


def cmd_stats(corpus: Corpus, slices: Iterable[str], config: RunConfig | None = None) -> list[ReportRow]:
    """Order, edge total, diameter, clique number and clustering per slice."""
    config = config or RunConfig()
    h = corpus.content_hash()
    rows = []
    for name in _slices(slices):
        g = slice_graph(corpus, name)
        values = [
            ("N", g.order),
            ("E", g.edge_total),
            ("diameter", metrics.diameter(g)),
            ("clique_number", metrics.clique_number(g)),
            ("clustering", metrics.clustering_coefficient(g, config.clustering)),
        ]
        rows += [ReportRow(name, k, "graph", v, h) for k, v in values]
    return rows


def _scores(g: MultiGraph, measure: str, config: RunConfig) -> metrics.VertexScores:
    if measure == "degree":
        return metrics.degree_centrality(g, normalized=config.normalized)
    if measure == "closeness":
        return metrics.closeness_centrality(g, conventional=config.closeness == "conventional")
    if measure == "betweenness":
        return metrics.betweenness_centrality(g, normalized=config.normalized)
    if measure == "eigenvector":
        return metrics.eigenvector_centrality(g, per_component=True)
    raise ValueError(f"unknown measure {measure!r}; choose from {', '.join(MEASURES)}")


def cmd_centrality(
    corpus: Corpus,
    slice_name: str,
    measure: str,
    subjects: Sequence[str] | None = None,
    config: RunConfig | None = None,
) -> list[ReportRow]:
    """Per-vertex scores sorted descending, optionally filtered to ``subjects``."""
    config = config or RunConfig()
    g = slice_graph(corpus, slice_name)
    scores = _scores(g, measure, config)
    keep = None
    if subjects:
        keep = {g.vertex(s) for s in subjects}
    metric = measure + ("_normalized" if scores.normalized else "")
    h = corpus.content_hash()
    return [
        ReportRow(slice_name, metric, g.label(v), val, h)
        for v, val in scores.ranked()
        if keep is None or v in keep
    ]


def cmd_pairs(
    corpus: Corpus,
    slice_name: str,
    pairs: Sequence[tuple[str, str]] | None = None,
    per_season: bool = False,
) -> list[ReportRow]:
    """Interaction counts for character pairs (default: the 15 pairs of friends)."""
    keys = SliceSpec.parse(slice_name).resolve(corpus)
    g = slice_graph(corpus, slice_name)
    pairs = list(pairs) if pairs else list(combinations(FRIENDS, 2))
    n_seasons = len({k.season for k in keys})
    h = corpus.content_hash()
    rows = []
    for a, b in pairs:
        for name in (a, b):
            if name not in corpus.names:
                raise GraphError(f"unknown character {name!r}")
        m = g.multiplicity(a, b)
        rows.append(ReportRow(slice_name, "interactions_per_season" if per_season else "interactions",
                              f"{a}|{b}", m / n_seasons if per_season else m, h))
    return rows


def partition_path(directory: str | Path, corpus_hash: str, slice_name: str, method: str, seed: int) -> Path:
    safe = "".join(c if c.isalnum() or c in "-_" else "_" for c in slice_name)
    return Path(directory) / f"{corpus_hash[:16]}_{safe}_{method}_{seed}.json"


def save_partition(path: str | Path, g: MultiGraph, p: Partition, meta: dict) -> None:
    doc = {"meta": meta, "communities": [[g.label(v) for v in c] for c in p.communities()]}
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def load_partition(path: str | Path, g: MultiGraph) -> tuple[Partition, dict]:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    p = Partition.from_communities([[g.vertex(name) for name in c] for c in doc["communities"]])
    if not p.covers(g):
        raise GraphError(f"{path}: partition does not cover slice vertices")
    return p, doc["meta"]


def _partition(
    corpus: Corpus, g: MultiGraph, slice_name: str, method: str, config: RunConfig,
    partition_dir: str | Path | None,
) -> Partition:
    seed = config.seed if method in SEEDED else 0
    if partition_dir is not None:
        path = partition_path(partition_dir, corpus.content_hash(), slice_name, method, seed)
        if path.exists():
            return load_partition(path, g)[0]
    p = detect(g, method, config.seed, config.walk_length, config.tol)
    if partition_dir is not None:
        Path(partition_dir).mkdir(parents=True, exist_ok=True)
        save_partition(path, g, p, _meta(config, corpus, slice_name, method))
    return p


def _meta(config: RunConfig, corpus: Corpus, slice_name: str, method: str) -> dict:
    return {"config": asdict(config), "corpus_hash": corpus.content_hash(), "slice": slice_name, "method": method,
            "seed": config.seed}


def cmd_communities(
    corpus: Corpus,
    slice_name: str,
    method: str,
    config: RunConfig | None = None,
    partition_dir: str | Path | None = None,
) -> tuple[Partition, list[ReportRow]]:
    """Run one method; report membership, count, modularity, mean mixing and embeddedness."""
    config = config or RunConfig()
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    g = slice_graph(corpus, slice_name)
    p = _partition(corpus, g, slice_name, method, config, partition_dir)
    h = corpus.content_hash()
    seed = config.seed if method in SEEDED else None
    isolated = g.order - len(vertex_mixing(g, p))

    def row(metric: str, subject: str, value: object) -> ReportRow:
        return ReportRow(slice_name, metric, subject, value, h, seed)

    rows = [
        row("communities", method, p.k),
        row("modularity", method, modularity(g, p)),
        row("mixing_mean", method, mixing_parameter(g, p)),
        row("mixing_excluded", method, isolated),
    ]
    for c, members in enumerate(p.communities()):
        rows.append(row("community_size", f"{method}:{c}", len(members)))
        try:
            rows.append(row("embeddedness", f"{method}:{c}", embeddedness(g, p, c)))
        except GraphError:
            pass
    rows += [row("membership", g.label(v), p[v]) for v in g.vertices()]
    return p, rows


def cmd_compare(
    corpus: Corpus,
    slice_name: str,
    methods: Sequence[str],
    metric: str = "nmi",
    config: RunConfig | None = None,
    partition_dir: str | Path | None = None,
) -> list[ReportRow]:
    """Upper-triangular pairwise similarity between methods' partitions."""
    config = config or RunConfig()
    if len(methods) < 2:
        raise ValueError("compare needs at least two methods")
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}")
    if metric not in ("nmi", "ari"):
        raise ValueError(f"unknown metric {metric!r}; choose nmi or ari")
    g = slice_graph(corpus, slice_name)
    parts = {m: _partition(corpus, g, slice_name, m, config, partition_dir) for m in dict.fromkeys(methods)}
    h = corpus.content_hash()
    rows = []
    for a, b in combinations(methods, 2):
        if metric == "nmi":
            val = nmi(parts[a], parts[b], config.nmi_normalization)
        else:
            val = adjusted_rand(parts[a], parts[b])
        rows.append(ReportRow(slice_name, metric, f"{a}|{b}", val, h, config.seed))
    return rows


# -- export ----------------------------------------------------------------

def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: MultiGraph, p: Partition | None = None) -> str:
    lines = ["graph G {"]
    for v in g.vertices():
        attrs = f"label={_dot_id(g.label(v))}"
        if p is not None:
            attrs += f", community={p[v]}"
        lines.append(f"  {v} [{attrs}];")
    for u, v, m in g.edges():
        lines.append(f"  {u} -- {v} [weight={m}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_graphml(g: MultiGraph, p: Partition | None = None) -> str:
    ns = "http://graphml.graphdrawing.org/xmlns"
    root = ET.Element("graphml", xmlns=ns)
    ET.SubElement(root, "key", id="label", attrib={"for": "node", "attr.name": "label", "attr.type": "string"})
    if p is not None:
        ET.SubElement(root, "key", id="community",
                      attrib={"for": "node", "attr.name": "community", "attr.type": "int"})
    ET.SubElement(root, "key", id="weight", attrib={"for": "edge", "attr.name": "weight", "attr.type": "int"})
    graph = ET.SubElement(root, "graph", id="G", edgedefault="undirected")
    for v in g.vertices():
        node = ET.SubElement(graph, "node", id=f"n{v}")
        ET.SubElement(node, "data", key="label").text = g.label(v)
        if p is not None:
            ET.SubElement(node, "data", key="community").text = str(p[v])
    for u, v, m in g.edges():
        edge = ET.SubElement(graph, "edge", source=f"n{u}", target=f"n{v}")
        ET.SubElement(edge, "data", key="weight").text = str(m)
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def to_edge_csv(g: MultiGraph, p: Partition | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["source", "target", "weight"])
    for u, v, m in g.edges():
        w.writerow([g.label(u), g.label(v), m])
    # isolated vertices would vanish from an edge list
    for v in g.vertices():
        if not g.neighbors(v):
            w.writerow([g.label(v), "", 0])
    return buf.getvalue()


def read_edge_csv(path: str | Path) -> MultiGraph:
    g = MultiGraph()
    with Path(path).open(encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            if not row["target"]:
                g.add_vertex(row["source"])
            else:
                g.add_interaction(row["source"], row["target"], count=int(row["weight"]))
    return g


EXPORTERS = {"dot": to_dot, "graphml": to_graphml, "edge-csv": to_edge_csv}


def cmd_export(g: MultiGraph, fmt: str, out: str | Path | None = None, p: Partition | None = None) -> str:
    if fmt not in EXPORTERS:
        raise ValueError(f"unknown export format {fmt!r}; choose from {', '.join(EXPORTERS)}")
    text = EXPORTERS[fmt](g, p)
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
    return text

"""
Structure and centrality
========================

Whole-graph statistics per slice, then per-character centrality on the
aggregate graph.
"""

import tempfile
from pathlib import Path

from charnet import load_corpus, slice_graph
from charnet import metrics as M

from synthetic_corpus import CORE, write_corpus

root = write_corpus(Path(tempfile.mkdtemp()) / "sitcom")
corpus = load_corpus(root, root / "slices.cfg")

print(f"{'slice':>8} {'N':>5} {'|E|':>6} {'diam':>4} {'clique':>6} {'clust':>6}")
for name in ("AE", "s1", "s5", "s10", "firsts", "lasts"):
    g = slice_graph(corpus, name)
    print(f"{name:>8} {g.order:5d} {g.edge_total:6d} {M.diameter(g):4d} {M.clique_number(g):6d} "
          f"{M.clustering_coefficient(g):6.3f}")

ae = slice_graph(corpus, "AE")

# each season's side plot never meets the rest of the cast, so the aggregate is
# disconnected and closeness refuses to guess; use the main component instead
try:
    M.closeness_centrality(ae)
except M.DisconnectedError as e:
    print("\ncloseness on AE:", e)
ae = ae.induced(max(ae.components(), key=len))
print("main component:", ae.order, "of", slice_graph(corpus, "AE").order, "characters")

# degree counts repeated interactions, so normalized degree can exceed 1
deg = M.degree_centrality(ae, normalized=True)
clo = M.closeness_centrality(ae)                  # N / sum of distances
clo_conv = M.closeness_centrality(ae, conventional=True)
bet = M.betweenness_centrality(ae, normalized=True)
eig = M.eigenvector_centrality(ae)

print(f"\n{'':>10} {'degree':>7} {'close':>6} {'close*':>6} {'betw':>6} {'eigen':>6}")
for name in CORE:
    v = ae.vertex(name)
    print(f"{name:>10} {deg[v]:7.2f} {clo[v]:6.3f} {clo_conv[v]:6.3f} {bet[v]:6.3f} {eig[v]:6.3f}")

seventh, value = deg.ranked()[6]
print(f"7th by degree: {ae.label(seventh)} ({value:.2f})")

print("assortativity:", round(M.degree_assortativity(ae), 3))
print("degree histogram (<10, <100, <1000, rest):", [round(x, 3) for x in M.degree_histogram(ae, [10, 100, 1000])])

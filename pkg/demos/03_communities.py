"""
Community detection
===================

The five detection methods on one season, and what the hierarchical ones
record along the way.
"""

import tempfile
from pathlib import Path

from charnet import load_corpus, slice_graph
from charnet.community import METHODS, detect, girvan_newman, modularity, multilevel_hierarchy, walktrap
from charnet.compare import embeddedness, mixing_parameter

from synthetic_corpus import write_corpus

root = write_corpus(Path(tempfile.mkdtemp()) / "sitcom")
corpus = load_corpus(root)
g = slice_graph(corpus, "s7")

# seeded methods (multilevel, label propagation) give the same partition for the same seed
for method in METHODS:
    p = detect(g, method, seed=1)
    print(f"{method:>20}: {p.k:3d} communities  Q={modularity(g, p):.3f}  mu={mixing_parameter(g, p):.3f}")

# multilevel keeps every coarsening level; modularity never drops
d = multilevel_hierarchy(g, seed=1)
print("\nmultilevel levels:", [p.k for p in d.levels], [round(q, 3) for q in d.modularity])

# walktrap starts from singletons and merges; the best cut is the level with maximal Q
wt = walktrap(g, walk_length=4)
best = wt.best_index()
print(f"walktrap: {len(wt)} levels, best cut at level {best} with {wt.levels[best].k} communities")

# Girvan-Newman starts from the connected components and records a level at each split
gn = girvan_newman(g, max_levels=10)
print("girvan-newman first levels:", [p.k for p in gn.levels])

# embeddedness of each multilevel community: 1.0 means no interactions leave it
p = detect(g, "multilevel", seed=1)
for c, members in enumerate(p.communities()):
    names = sorted(g.label(v) for v in members)
    shown = ", ".join(names[:4]) + (" ..." if len(names) > 4 else "")
    print(f"  community {c}: size {len(members):3d}  embeddedness {embeddedness(g, p, c):.2f}  [{shown}]")

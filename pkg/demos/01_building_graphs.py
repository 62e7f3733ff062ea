"""
Building interaction graphs
===========================

Load a directory of episode files, look at single episodes, and merge them
into seasons and custom slices.
"""

import tempfile
from pathlib import Path

from charnet import MultiGraph, load_corpus, merge, slice_graph

from synthetic_corpus import write_corpus

# a graph can be built by hand; repeated interactions raise the multiplicity
g = MultiGraph()
g.add_interaction("Ross", "Rachel")
g.add_interaction("Ross", "Rachel")
g.add_interaction("Monica", "Ross", count=3)
print(g, "Ross-Rachel:", g.multiplicity("Ross", "Rachel"), "Ross degree:", g.degree("Ross"))

# the simple view forgets multiplicities; geodesic measures use it
print("simple edges:", g.simple().edge_count())

# a corpus is one file per episode, named sSSeEE.txt, one "A<TAB>B" line per interaction
root = write_corpus(Path(tempfile.mkdtemp()) / "sitcom")
corpus = load_corpus(root, root / "slices.cfg")
print(len(corpus.episodes), "episodes, seasons", corpus.seasons())

# slices: one episode, one season, a season range, or a named situation
for name in ("s1e1", "s3", "s1-s4", "AE", "firsts", "thanksgiving"):
    sg = slice_graph(corpus, name)
    print(f"{name:>12}: N={sg.order:4d}  |E|={sg.edge_total:6d}")

# merging episode graphs by hand gives the same graph as the slice
by_hand = merge([corpus.episodes[k] for k in corpus.keys() if k.season == 3])
print("merge == slice:", by_hand == slice_graph(corpus, "s3"))

# vertex ids are shared across the corpus, so a character keeps its id in every slice
print("Ross id in s1e1 and s10:", slice_graph(corpus, "s1e1").vertex("Ross"), slice_graph(corpus, "s10").vertex("Ross"))

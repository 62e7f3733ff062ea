"""Invariants of the metric, community and comparison layers as property tests.

``PROPERTIES`` lists every test here so the acceptance suite can run the set
under its time budget.
"""

import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charnet import MultiGraph, Partition
from charnet import metrics as M
from charnet.community import METHODS, detect, girvan_newman, modularity, multilevel_hierarchy, walktrap
from charnet.community.label_propagation import best_labels, label_propagation
from charnet.compare import adjusted_rand, embeddedness, mixing_parameter, nmi
from graphs import complete, cycle, from_edges, graph_and_partition, multigraphs, random_graph
import oracles

fast = settings(max_examples=40, deadline=None)


# -- metrics ---------------------------------------------------------------

@fast
@given(multigraphs(min_n=3, max_n=9))
def test_brandes_equals_enumeration(g):
    brute = oracles.brute_betweenness(g)
    got = M.betweenness_centrality(g, normalized=False)
    for v, b in brute.items():
        assert abs(got[v] - float(b)) <= 1e-9


@fast
@given(multigraphs(min_n=2, max_n=10))
def test_betweenness_sum_equals_pair_side(g):
    vs, d = oracles.floyd_warshall(g)
    pair_side = sum(d[i, j] - 1 for i, j in combinations(range(len(vs)), 2) if np.isfinite(d[i, j]))
    assert sum(M.betweenness_centrality(g, normalized=False).values.values()) == pytest.approx(pair_side)


@fast
@given(multigraphs(min_n=3, max_n=10))
def test_normalized_betweenness_in_unit_interval(g):
    assert all(-1e-12 <= b <= 1 + 1e-12 for b in M.betweenness_centrality(g).values.values())


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 50), st.floats(0.02, 0.4), st.integers(0, 10**6))
def test_diameter_matches_floyd_warshall(n, p, seed):
    g = random_graph(random.Random(seed), n, p)
    _vs, d = oracles.floyd_warshall(g)
    assert M.diameter(g) == int(d[np.isfinite(d)].max())


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
def test_clique_number_cocktail_party(n):
    g = complete(n)
    h = MultiGraph(g.names)
    for u, v, _m in g.edges():
        if not (u % 2 == 0 and v == u + 1):
            h.add_interaction(g.label(u), g.label(v))
    for v in g.vertices():
        h.add_vertex(g.label(v))
    assert M.clique_number(h) == n // 2 == oracles.brute_clique_number(h)


@fast
@given(multigraphs(min_n=1, max_n=12), st.integers(0, 10**6))
def test_clustering_ignores_multiplicity(g, seed):
    rng = random.Random(seed)
    h = from_edges([(g.label(u), g.label(v), rng.randint(1, 9)) for u, v, _m in g.edges()])
    for v in g.vertices():
        h.add_vertex(g.label(v))
    assert M.clustering_coefficient(g) == pytest.approx(M.clustering_coefficient(h))
    assert 0.0 <= M.clustering_coefficient(g) <= 1.0


def _hypercube(d: int) -> MultiGraph:
    return from_edges([(i, i ^ (1 << b)) for i in range(1 << d) for b in range(d) if i < i ^ (1 << b)])


@pytest.mark.parametrize("g", [cycle(7), cycle(8), complete(6), _hypercube(3), _hypercube(4)],
                         ids=["C7", "C8", "K6", "Q3", "Q4"])
def test_eigenvector_constant_on_vertex_transitive(g):
    vals = list(M.eigenvector_centrality(g).values.values())
    assert max(vals) - min(vals) < 1e-8


# -- community -------------------------------------------------------------

def _q_after_move(g, labels, v, c):
    moved = dict(labels)
    moved[v] = c
    return modularity(g, Partition.from_labels(moved))


@fast
@given(multigraphs(min_n=2, max_n=12, min_edges=1), st.integers(0, 2**64 - 1))
def test_multilevel_local_optimum_and_monotone(g, seed):
    d = multilevel_hierarchy(g, seed)
    assert all(b >= a - 1e-12 for a, b in zip(d.modularity, d.modularity[1:]))
    p = d.levels[-1]
    q = modularity(g, p)
    labels = dict(p.assignment)
    for v in g.vertices():
        for c in list(range(p.k)) + [p.k]:
            if c != labels[v]:
                assert _q_after_move(g, labels, v, c) <= q + 1e-12


@fast
@given(multigraphs(min_n=2, max_n=14, min_edges=1), st.integers(0, 2**64 - 1))
def test_label_propagation_terminal_state(g, seed):
    p = label_propagation(g, seed)
    labels = dict(p.assignment)
    for v in g.vertices():
        assert labels[v] in best_labels(g, labels, v)


@settings(max_examples=25, deadline=None)
@given(multigraphs(min_n=2, max_n=14, min_edges=1))
def test_girvan_newman_strictly_refining(g):
    d = girvan_newman(g)
    for coarse, fine in zip(d.levels, d.levels[1:]):
        assert fine.k > coarse.k
        for c in fine.communities():
            assert len({coarse[v] for v in c}) == 1


def _connected_within(g, members):
    sub = g.induced(members)
    return sub.order <= 1 or sub.is_connected()


@settings(max_examples=25, deadline=None)
@given(multigraphs(min_n=2, max_n=16, min_edges=1), st.integers(0, 2**32))
def test_partitions_well_formed(g, seed):
    comp_of = {v: i for i, c in enumerate(g.components()) for v in c}
    for method in METHODS:
        p = detect(g, method, seed)
        assert p.covers(g)
        assert set(p.assignment.values()) == set(range(p.k))
        for c in p.communities():
            if method != "leading_eigenvector":
                assert len({comp_of[v] for v in c}) == 1
            if method in ("multilevel", "label_propagation"):
                assert _connected_within(g, c)


@pytest.mark.parametrize("seed", range(5))
def test_connected_communities_on_larger_fixtures(seed):
    g = random_graph(random.Random(seed), 50, 0.06, max_mult=4)
    for method in ("multilevel", "label_propagation"):
        for c in detect(g, method, seed).communities():
            assert _connected_within(g, c)


@settings(max_examples=15, deadline=None)
@given(multigraphs(min_n=2, max_n=14, min_edges=1), st.integers(0, 2**64 - 1))
def test_determinism(g, seed):
    for method in METHODS:
        assert detect(g, method, seed).assignment == detect(g, method, seed).assignment


@fast
@given(graph_and_partition())
def test_modularity_bounds(gp):
    g, labels = gp
    q = modularity(g, Partition.from_labels(labels))
    assert -0.5 - 1e-12 <= q < 1.0


# -- compare ---------------------------------------------------------------

partitions = st.integers(1, 30).flatmap(
    lambda n: st.tuples(st.lists(st.integers(0, 5), min_size=n, max_size=n),
                        st.lists(st.integers(0, 5), min_size=n, max_size=n)))


def _pp(pair):
    a, b = pair
    return Partition.from_labels(dict(enumerate(a))), Partition.from_labels(dict(enumerate(b)))


@fast
@given(partitions)
def test_similarity_symmetric_and_bounded(pair):
    p1, p2 = _pp(pair)
    assert nmi(p1, p2) == pytest.approx(nmi(p2, p1))
    assert adjusted_rand(p1, p2) == pytest.approx(adjusted_rand(p2, p1))
    assert 0.0 <= nmi(p1, p2) <= 1.0
    assert adjusted_rand(p1, p2) <= 1.0 + 1e-12


@fast
@given(partitions, st.randoms(use_true_random=False))
def test_similarity_label_invariance(pair, rnd):
    p1, _ = _pp(pair)
    ids = list(range(p1.k))
    rnd.shuffle(ids)
    shuffled = Partition.from_labels({v: ("x", ids[c]) for v, c in p1.assignment.items()})
    assert nmi(p1, shuffled) == pytest.approx(1.0)
    assert adjusted_rand(p1, shuffled) == pytest.approx(1.0)
    assert nmi(p1, p1) == pytest.approx(1.0)


@fast
@given(graph_and_partition())
def test_embeddedness_complements_external_ratio(gp):
    g, labels = gp
    p = Partition.from_labels(labels)
    for c, members in enumerate(p.communities()):
        tot = sum(g.degree(v) for v in members)
        if tot == 0:
            continue
        ext = sum(m for v in members for w, m in g.neighbors(v).items() if p[w] != c)
        assert embeddedness(g, p, c) + ext / tot == pytest.approx(1.0)


@fast
@given(graph_and_partition(), st.integers(0, 10**6))
def test_mixing_never_decreases_on_refinement(gp, seed):
    g, labels = gp
    rng = random.Random(seed)
    coarse = Partition.from_labels(labels)
    fine = Partition.from_labels({v: (labels[v], rng.randrange(3)) for v in g.vertices()})
    assert mixing_parameter(g, fine) >= mixing_parameter(g, coarse) - 1e-12


PROPERTIES = [
    test_brandes_equals_enumeration,
    test_betweenness_sum_equals_pair_side,
    test_normalized_betweenness_in_unit_interval,
    test_diameter_matches_floyd_warshall,
    test_clustering_ignores_multiplicity,
    test_multilevel_local_optimum_and_monotone,
    test_label_propagation_terminal_state,
    test_girvan_newman_strictly_refining,
    test_partitions_well_formed,
    test_determinism,
    test_modularity_bounds,
    test_similarity_symmetric_and_bounded,
    test_similarity_label_invariance,
    test_embeddedness_complements_external_ratio,
    test_mixing_never_decreases_on_refinement,
]

import logging
import math
import random

import numpy as np
import pytest

from charnet import GraphError, Partition
from charnet.compare import adjusted_rand, confusion, embeddedness, mixing_parameter, nmi, vertex_mixing
from graphs import disjoint_cliques, from_edges, path, random_graph


def P(*groups):
    return Partition.from_communities(groups)


def test_confusion_table():
    t = confusion(P([0, 1], [2, 3, 4]), P([0], [1, 2], [3, 4]))
    assert t.counts.tolist() == [[1, 1, 0], [0, 1, 2]]
    assert t.n == 5 and t.rows.tolist() == [2, 3] and t.cols.tolist() == [1, 2, 2]


def test_nmi_identity():
    p = P([0, 3], [1], [2, 4, 5])
    assert nmi(p, p) == pytest.approx(1.0)


def test_nmi_hand_value():
    # P1 = {ab|cd|ef}, P2 = {ab|cdef}. P1 refines P2, so I = H(P2).
    h1 = math.log(3)
    h2 = -(1 / 3 * math.log(1 / 3) + 2 / 3 * math.log(2 / 3))
    expected = 2 * h2 / (h1 + h2)
    assert expected == pytest.approx(0.733680, abs=1e-6)
    p1 = P([0, 1], [2, 3], [4, 5])
    p2 = P([0, 1], [2, 3, 4, 5])
    assert nmi(p1, p2) == pytest.approx(expected, abs=1e-12)


def test_nmi_trivial_conventions():
    whole = Partition.whole(range(4))
    assert nmi(whole, whole) == 1.0
    assert nmi(whole, P([0, 1], [2, 3])) == 0.0


def test_nmi_variants():
    p1 = P([0, 1], [2, 3], [4, 5])
    p2 = P([0, 1], [2, 3, 4, 5])
    h1 = math.log(3)
    h2 = -(1 / 3 * math.log(1 / 3) + 2 / 3 * math.log(2 / 3))
    assert nmi(p1, p2, "max") == pytest.approx(h2 / h1)
    assert nmi(p1, p2, "sqrt") == pytest.approx(h2 / math.sqrt(h1 * h2))
    with pytest.raises(ValueError):
        nmi(p1, p2, "geometric-ish")


def test_mismatched_vertex_sets():
    with pytest.raises(GraphError):
        nmi(P([0, 1]), P([0, 2]))
    with pytest.raises(GraphError):
        adjusted_rand(P([0, 1]), P([0], [2]))


def test_ari_identity_and_trivial():
    p = P([0, 3], [1], [2, 4, 5])
    assert adjusted_rand(p, p) == pytest.approx(1.0)
    # all singletons vs one community: index 0, expected 0, max 3
    assert adjusted_rand(Partition.singletons(range(4)), Partition.whole(range(4))) == 0.0
    assert adjusted_rand(Partition.singletons(range(4)), Partition.singletons(range(4))) == 1.0


def test_ari_hand_value():
    # contingency [[2,0],[1,1]]: index 1, row pairs 1+1, col pairs 3+0, total 6
    p1 = P([0, 1], [2, 3])
    p2 = P([0, 1, 2], [3])
    expected = (1 - 2 * 3 / 6) / ((2 + 3) / 2 - 2 * 3 / 6)
    assert adjusted_rand(p1, p2) == pytest.approx(expected)


def test_ari_random_partitions_near_zero():
    vals = []
    for seed in range(100):
        rng = np.random.default_rng(seed)
        a = rng.integers(0, 10, 1000)
        b = rng.integers(0, 10, 1000)
        vals.append(adjusted_rand(Partition.from_labels(dict(enumerate(a))), Partition.from_labels(dict(enumerate(b)))))
    assert abs(np.mean(vals)) < 0.02


def test_mixing_trivial_cases():
    g = random_graph(random.Random(3), 10, 0.4, max_mult=3)
    assert mixing_parameter(g, Partition.whole(g.vertices())) == 0.0
    assert mixing_parameter(g, Partition.singletons(g.vertices())) == pytest.approx(1.0)


def test_mixing_weighted_hand_value():
    # a-b x3, b-c x1; {a,b}|{c}: mu_a 0, mu_b 1/4, mu_c 1
    g = from_edges([("a", "b", 3), ("b", "c", 1)])
    p = Partition.from_labels({0: 0, 1: 0, 2: 1})
    assert vertex_mixing(g, p) == {0: 0.0, 1: 0.25, 2: 1.0}
    assert mixing_parameter(g, p) == pytest.approx(1.25 / 3)


def test_mixing_excludes_isolated(caplog):
    g = path(3)
    g.add_vertex("hermit")
    with caplog.at_level(logging.WARNING):
        mu = mixing_parameter(g, Partition.whole(g.vertices()))
    assert mu == 0.0
    assert "excluded 1 isolated" in caplog.text


def test_mixing_all_isolated():
    g = from_edges([], n=2, names=["a", "b"])
    with pytest.raises(GraphError):
        mixing_parameter(g, Partition.whole(g.vertices()))


def test_embeddedness_cases():
    g = disjoint_cliques(3, 3)
    p = Partition.from_communities([[0, 1, 2], [3, 4, 5]])
    assert embeddedness(g, p, 0) == 1.0
    star = from_edges([(0, 1), (0, 2)])
    q = Partition.from_communities([[0], [1, 2]])
    assert embeddedness(star, q, 0) == 0.0


def test_embeddedness_hand_count():
    # triangle x-y-z (weights 2,1,1) plus z-w (3) and w-u (1); community {x,y,z}
    g = from_edges([("x", "y", 2), ("y", "z", 1), ("z", "x", 1), ("z", "w", 3), ("w", "u", 1)])
    p = Partition.from_communities([[0, 1, 2], [3, 4]])
    # internal multiplicity 4 -> internal degree 8; total degree 3+3+5 = 11
    assert embeddedness(g, p, 0) == pytest.approx(8 / 11)
    # {w,u}: internal 1 -> 2; total 4+1 = 5
    assert embeddedness(g, p, 1) == pytest.approx(2 / 5)


def test_embeddedness_errors():
    g = from_edges([(0, 1)], n=3, names=["a", "b", "c"])
    p = Partition.from_communities([[0, 1], [2]])
    with pytest.raises(GraphError):
        embeddedness(g, p, 1)
    with pytest.raises(GraphError):
        embeddedness(g, p, 5)

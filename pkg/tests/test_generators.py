import random

import pytest

from antivdw.generators import (FamilyError, FamilySpec, add_apex, all_graphs_up_to,
                                automorphism_generators, cartesian_product, corpus,
                                family_graph, generate, nonisomorphic_trees, parse_family,
                                random_tree)
from antivdw.graph_core import distance_matrix, is_connected, is_tree


@pytest.mark.parametrize("spec,n,m", [
    ("path:9", 9, 8), ("cycle:7", 7, 7), ("complete:5", 5, 10), ("empty:3", 3, 0),
    ("star:6", 7, 6), ("kbipartite:5,5", 10, 25), ("hypercube:4", 16, 32),
    ("complete_binary_tree:3", 15, 14), ("comb:4", 8, 7), ("broken_comb:5,4", 6, 5),
])
def test_family_sizes(spec, n, m):
    g = family_graph(spec)
    assert (g.n, g.m) == (n, m)


def test_hypercube_distance_is_hamming():
    g = family_graph("hypercube:4")
    dm = distance_matrix(g)
    assert all(dm(i, j) == bin(i ^ j).count("1") for i in range(16) for j in range(16))


def test_product_parsing():
    g = family_graph("product:(path:3)x(cycle:4)")
    assert (g.n, g.m) == (12, 20)
    nested = family_graph("product:(product:(path:2)x(path:2))x(path:2)")
    assert (nested.n, nested.m) == (8, 12)
    assert parse_family("qn:3") == FamilySpec("hypercube", (3,))


@pytest.mark.parametrize("bad", ["path:x", "cycle:2", "nope:3", "product:(path:2)(path:2)",
                                 "broken_comb:5,10", "kbipartite:3"])
def test_invalid_families(bad):
    with pytest.raises(FamilyError):
        family_graph(bad)


def test_product_labelling():
    g, h = family_graph("path:2"), family_graph("path:3")
    gh = cartesian_product(g, h)
    # (u, i) -> u + i*g.n
    assert gh.has_edge(0, 1) and gh.has_edge(0, 2) and not gh.has_edge(1, 2)


def test_labelled_corpus_counts():
    # connected labelled graphs: 1, 1, 4, 38, 728, 26704 (OEIS A001187)
    assert [sum(1 for _ in all_graphs_up_to(n, connected_only=True)) for n in range(1, 6)] \
        == [1, 1, 4, 38, 728]
    assert sum(1 for _ in all_graphs_up_to(4)) == 64
    assert sum(1 for _ in corpus(3, connected_only=True)) == 6


def test_nonisomorphic_tree_counts():
    assert [sum(1 for _ in nonisomorphic_trees(n)) for n in range(1, 11)] \
        == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


def test_random_tree_reproducible():
    a = random_tree(12, random.Random(5))
    b = random_tree(12, random.Random(5))
    assert a == b and is_tree(a) and a.n == 12


def test_apex_dominates():
    g = add_apex(family_graph("empty:4"))
    assert g.dominating_vertices() == [4] and is_connected(g)


@pytest.mark.parametrize("spec", ["path:5", "cycle:6", "star:4", "hypercube:3",
                                  "kbipartite:2,3", "complete:4"])
def test_automorphisms_preserve_edges(spec):
    s = parse_family(spec)
    g = generate(s)
    for p in automorphism_generators(s):
        assert sorted(p) == list(range(g.n))
        assert all(g.has_edge(p[u], p[v]) for u, v in g.edges())

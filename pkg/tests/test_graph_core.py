import math

import pytest
from hypothesis import given, strategies as st

from antivdw.graph_core import (INF, DisconnectedError, Graph, GraphError, connected_components,
                                distance_matrix, distance_profile, is_connected, is_tree,
                                shortest_path)
from antivdw.oracles import floyd_warshall
from conftest import graphs


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_from_edges_sorts_and_validates():
    g = Graph.from_edges(4, [(2, 0), (0, 1), (3, 2)])
    assert g.adjacency == ((1, 2), (0,), (0, 3), (2,))
    assert g.edges() == [(0, 1), (0, 2), (2, 3)]
    assert g.m == 3
    with pytest.raises(GraphError, match="self-loop"):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(GraphError, match="out of range"):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(GraphError, match="duplicate"):
        Graph.from_edges(2, [(0, 1), (1, 0)])


def test_asymmetric_adjacency_rejected():
    with pytest.raises(GraphError, match="symmetric"):
        Graph(2, ((1,), ()))


def test_distance_infinite_between_components():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    dm = distance_matrix(g)
    assert dm(0, 1) == 1 and dm(0, 2) == INF
    assert INF == math.inf
    assert not dm.is_connected
    assert connected_components(g) == [[0, 1], [2, 3]]
    with pytest.raises(DisconnectedError):
        distance_profile(g)


def test_profile_of_path():
    p = distance_profile(path(5))
    assert p.ecc == (4, 3, 2, 3, 4)
    assert (p.radius, p.diameter, p.central) == (2, 4, frozenset({2}))


def test_shortest_path_breaks_ties_lexicographically():
    c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    assert shortest_path(c6, 0, 3) == [0, 1, 2, 3]


def test_text_and_json_round_trip():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)], name="two parts")
    assert Graph.from_text(g.to_text()).adjacency == g.adjacency
    assert Graph.from_json(g.to_json()) == g
    with pytest.raises(GraphError, match="header"):
        Graph.from_text("3 2\n0 1\n")


def test_dominating_vertices_and_tree():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert star.dominating_vertices() == [0]
    assert is_tree(star) and not is_tree(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


@given(graphs())
def test_bfs_matches_floyd_warshall(g):
    dm = distance_matrix(g)
    fw = floyd_warshall(g)
    assert all(dm(u, v) == fw[u][v] for u in range(g.n) for v in range(g.n))


@given(graphs(nmin=2), st.randoms(use_true_random=False))
def test_relabel_preserves_distances(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    h = g.relabel(perm)
    d, e = distance_matrix(g), distance_matrix(h)
    assert all(d(u, v) == e(perm[u], perm[v]) for u in range(g.n) for v in range(g.n))


@given(graphs(nmin=2, connected=True))
def test_shortest_path_is_geodesic(g):
    dm = distance_matrix(g)
    p = shortest_path(g, 0, g.n - 1, dm)
    assert len(p) - 1 == dm(0, g.n - 1)
    assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
    assert is_connected(g)

import itertools

import networkx as nx
import numpy as np
import pytest

from limpack.atlas import small_graphs
from limpack.generators import disjoint_union, gen_named
from limpack.graph import Graph, GraphError, bfs_distance, build_graph, closed_neighborhood, is_connected, is_regular
from limpack.io import to_networkx


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.adj == ((1,), (0, 2), (1,))
    assert (g.max_deg, g.min_deg, g.m) == (2, 1, 2)


def test_build_edgeless():
    g = build_graph(2, [])
    assert g.max_deg == g.min_deg == 0
    assert g.m == 0


def test_build_petersen(petersen):
    assert petersen.n == 10 and petersen.m == 15
    assert set(petersen.deg) == {3}


def test_empty_graph():
    g = build_graph(0, [])
    assert g.n == 0 and g.max_deg == 0 and g.is_connected()
    assert g.diameter() == 0


def test_duplicates_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1), (2, 1)])
    assert g.m == 2
    assert g == build_graph(3, [(1, 2), (0, 1)])


@pytest.mark.parametrize("edges", [[(1, 1)], [(0, 3)], [(-1, 0)]])
def test_build_rejects(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_direct_constructor_validates():
    with pytest.raises(GraphError):
        Graph(2, [[1], []])
    with pytest.raises(GraphError):
        Graph(3, [[2, 1], [0], [0]])


def test_closed_neighborhood(p3, petersen):
    assert closed_neighborhood(p3, 1) == {0, 1, 2}
    assert build_graph(2, []).closed_neighborhood(1) == {1}
    assert all(len(petersen.closed_neighborhood(v)) == 4 for v in range(10))
    with pytest.raises(GraphError):
        p3.closed_neighborhood(3)


def test_bfs_distance(p3, petersen):
    assert bfs_distance(p3, 0, 2) == 2
    assert bfs_distance(p3, 1, 1) == 0
    assert bfs_distance(build_graph(2, []), 0, 1) is None
    for u, v in itertools.combinations(range(10), 2):
        assert 1 <= bfs_distance(petersen, u, v) <= 2
    assert petersen.diameter() == 2


def test_connectivity_and_regularity(p3, c6, two_petersen):
    assert is_connected(p3) and not is_regular(p3)
    assert is_connected(c6) and is_regular(c6)
    assert not is_connected(two_petersen) and is_regular(two_petersen)
    assert len(two_petersen.components()) == 2


def test_closed_neighborhood_sizes_all_small():
    for g in small_graphs(8, min_n=0):
        for v in range(g.n):
            assert len(g.closed_neighborhood(v)) == g.deg[v] + 1
            assert g.closed_masks[v].bit_count() == g.deg[v] + 1
        assert sum(g.deg) == 2 * g.m


def test_distance_is_metric_on_all_graphs_up_to_8():
    for g in small_graphs(8, min_n=1):
        d = np.array([[np.inf if x is None else x for x in row] for row in g.distances])
        assert (d == d.T).all()
        assert (np.diag(d) == 0).all()
        # d[i,k] <= d[i,j] + d[j,k]
        assert (d[:, None, :] <= d[:, :, None] + d[None, :, :]).all()


def test_bfs_matches_networkx():
    for g in small_graphs(7, min_n=1)[::7]:
        lengths = dict(nx.all_pairs_shortest_path_length(to_networkx(g)))
        for u in range(g.n):
            for v in range(g.n):
                assert g.bfs_distance(u, v) == lengths[u].get(v)


def test_graph_pickles():
    import pickle

    g = disjoint_union(gen_named("petersen"), gen_named("path", 3))
    h = pickle.loads(pickle.dumps(g))
    assert h == g and h.closed_masks == g.closed_masks

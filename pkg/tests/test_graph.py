import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sociogrow.graph import (
    Graph,
    GraphError,
    bfs_levels,
    complete_graph,
    connected_components,
    is_connected,
    path_graph,
)

from conftest import graph_from_adjacency
from oracles import floyd_warshall, random_adjacency

ANCHOR17_LEVELS = [
    {6, 7},
    {1, 5, 11},
    {2, 3, 4, 8, 9, 12, 13, 14, 18, 20, 22, 32},
    {10, 25, 26, 28, 29, 31, 33, 34},
    {15, 16, 19, 21, 23, 24, 27, 30},
]


@pytest.mark.parametrize("n,edges", [(1, 0), (3, 3), (5, 10), (8, 28)])
def test_complete_graph_edge_count(n, edges):
    g = complete_graph(n)
    assert g.node_count == n
    assert g.edge_count == edges == n * (n - 1) // 2


def test_triangle_degrees():
    g = complete_graph(3)
    assert [g.degree(i) for i in range(3)] == [2, 2, 2]


def test_complete_graph_rejects_zero():
    with pytest.raises(GraphError):
        complete_graph(0)


def test_add_node_gets_next_id():
    g = complete_graph(4)
    assert g.add_node() == 4
    assert g.degree(4) == 0


def test_add_edge_idempotent():
    g = Graph(3)
    assert g.add_edge(0, 1)
    assert not g.add_edge(1, 0)
    assert g.edge_count == 1
    tri = complete_graph(3)
    tri.add_edge(0, 1)
    assert tri.edge_count == 3


@pytest.mark.parametrize("i,j", [(0, 0), (0, 5), (-1, 1)])
def test_add_edge_rejects(i, j):
    with pytest.raises(GraphError):
        Graph(3).add_edge(i, j)


def test_zachary_levels_from_17(zachary):
    anchor = zachary.node(17)
    dec = bfs_levels(zachary.graph, anchor)
    got = [{int(zachary.labels[v]) for v in ring} for ring in dec.levels]
    assert got == ANCHOR17_LEVELS


def test_zachary_degree_of_34(zachary):
    assert zachary.graph.degree(zachary.node(34)) == 17


def test_small_levels():
    assert bfs_levels(complete_graph(3), 0).levels == ((1, 2),)
    assert bfs_levels(path_graph(4), 0).levels == ((1,), (2,), (3,))


def test_bfs_unknown_anchor():
    with pytest.raises(GraphError):
        bfs_levels(Graph(2), 7)


def test_unreachable_nodes_excluded():
    g = Graph(4)
    g.add_edge(0, 1)
    g.add_edge(2, 3)
    dec = bfs_levels(g, 0)
    assert dec.levels == ((1,),)
    assert connected_components(g) == [[0, 1], [2, 3]]
    assert not is_connected(g)


def test_csr_tracks_mutation():
    g = path_graph(3)
    indptr, indices = g.csr()
    assert indptr.tolist() == [0, 1, 3, 4]
    assert indices.tolist() == [1, 0, 2, 1]
    g.add_edge(0, 2)
    assert g.csr()[1].tolist() == [1, 2, 0, 2, 0, 1]


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 50), p=st.floats(0.0, 0.5), seed=st.integers(0, 2**32 - 1), anchor=st.integers(0, 49))
def test_levels_match_all_pairs_distances(n, p, seed, anchor):
    adj = random_adjacency(np.random.default_rng(seed), n, p)
    g = graph_from_adjacency(adj)
    anchor %= n
    dec = bfs_levels(g, anchor)
    dist = floyd_warshall(adj)[anchor]
    seen = set()
    for x, ring in enumerate(dec.levels, start=1):
        assert ring, "levels are never empty"
        assert not seen & set(ring)
        seen |= set(ring)
        assert all(dist[v] == x for v in ring)
    reachable = {v for v in range(n) if np.isfinite(dist[v]) and v != anchor}
    assert seen == reachable
    # every node in level x has a neighbor in level x-1
    level_of = dec.distance_map()
    for v, x in level_of.items():
        if x:
            assert any(level_of.get(w) == x - 1 for w in g.neighbors(v))


@settings(max_examples=40, deadline=None)
@given(n=st.integers(0, 40), p=st.floats(0.0, 1.0), seed=st.integers(0, 2**32 - 1))
def test_handshake_and_consistency(n, p, seed):
    g = graph_from_adjacency(random_adjacency(np.random.default_rng(seed), n, p))
    assert g.degrees().sum() == 2 * g.edge_count
    for i, j in g.edges():
        assert i < j and g.has_edge(j, i)
        assert j in g.neighbors(i) and i in g.neighbors(j)
    assert len(g.edge_set()) == g.edge_count

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biconvex import (
    BipartiteGraph,
    DuplicateEdge,
    IndexOutOfRange,
    VertexId,
    bfs_distance,
    bfs_distances,
    gen_random_bipartite,
    induced_subgraph,
    is_connected,
    transpose,
)

from .conftest import A, B


def test_k2_constructs():
    g = BipartiteGraph(1, 1, [(1, 1)])
    assert g.n == 2 and g.m == 1
    assert g.edges == ((1, 1),)


def test_fig1_shape(fig1):
    assert (fig1.n_a, fig1.n_b, fig1.m) == (4, 3, 6)
    assert fig1.edges == ((1, 1), (1, 2), (1, 3), (2, 1), (3, 2), (4, 3))


def test_edge_readback_is_exact():
    edges = [(2, 3), (1, 1), (2, 1)]
    g = BipartiteGraph(2, 3, edges)
    assert set(g.edges) == set(edges)


def test_endpoint_out_of_range():
    with pytest.raises(IndexOutOfRange):
        BipartiteGraph(2, 2, [(3, 1)])
    with pytest.raises(IndexOutOfRange):
        BipartiteGraph(2, 2, [(1, 0)])


def test_duplicate_edge_rejected():
    with pytest.raises(DuplicateEdge):
        BipartiteGraph(2, 2, [(1, 1), (1, 1)])


def test_empty_graph_rejected():
    with pytest.raises(ValueError):
        BipartiteGraph(0, 0, [])


def test_vertex_parse_roundtrip():
    for name in ("a1", "b12"):
        assert str(VertexId.parse(name)) == name
    with pytest.raises(ValueError):
        VertexId.parse("c3")
    with pytest.raises(ValueError):
        VertexId.parse("a")


def test_connectivity(fig1, k22):
    assert is_connected(fig1)
    assert is_connected(k22)
    assert not is_connected(BipartiteGraph(2, 1, [(1, 1)]))  # a2 isolated


def test_bfs_distance_fig1(fig1):
    # a2 b1 a1 b2 a3 is the only route between the two pendant vertices
    assert bfs_distance(fig1, A(2), A(3)) == 4
    assert bfs_distance(fig1, A(1), A(1)) == 0


def test_bfs_distance_k22(k22):
    assert bfs_distance(k22, A(1), A(2)) == 2


def test_bfs_distance_disconnected():
    g = BipartiteGraph(2, 1, [(1, 1)])
    assert bfs_distance(g, A(2), B(1)) == math.inf


def test_induced_subgraph_mapping(fig1):
    sub, back = induced_subgraph(fig1, [1, 3], [2, 3])
    assert (sub.n_a, sub.n_b) == (2, 2)
    assert back.a_to_parent == (1, 3) and back.b_to_parent == (2, 3)
    # parent edges (1,2), (1,3), (3,2) survive under renumbering
    assert sub.edges == ((1, 1), (1, 2), (2, 1))


def test_transpose_roundtrip(fig1):
    t = transpose(fig1)
    assert (t.n_a, t.n_b) == (fig1.n_b, fig1.n_a)
    assert transpose(t) == fig1


small_graphs = st.builds(
    gen_random_bipartite,
    n_a=st.integers(1, 6),
    n_b=st.integers(1, 6),
    density=st.sampled_from([0.3, 0.6, 0.9]),
    seed=st.integers(0, 10_000),
)


@given(small_graphs)
@settings(max_examples=60, deadline=None)
def test_bfs_symmetry_and_triangle(g):
    vertices = list(g.vertices())
    dist = {v: bfs_distances(g, v) for v in vertices}
    for u in vertices:
        for v in vertices:
            assert dist[u].get(v, math.inf) == dist[v].get(u, math.inf)
    for u in vertices[:4]:
        for v in vertices[:4]:
            for w in vertices[:4]:
                duv = dist[u].get(v, math.inf)
                duw = dist[u].get(w, math.inf)
                dwv = dist[w].get(v, math.inf)
                assert duv <= duw + dwv


@given(small_graphs)
@settings(max_examples=60, deadline=None)
def test_bfs_parity_matches_parts(g):
    for u in g.vertices():
        for v, d in bfs_distances(g, u).items():
            assert (d % 2 == 0) == (u.part == v.part)

import pytest

from biconvex import BipartiteGraph, DualOrdering, VertexId, fig1_graph


def A(i):
    return VertexId.a(i)


def B(j):
    return VertexId.b(j)


def path_graph(m: int) -> BipartiteGraph:
    """The path on m vertices; position t (1-based) is a((t+1)//2) or b(t//2)."""
    if m == 1:
        return BipartiteGraph(1, 0, [])
    edges = []
    for t in range(m - 1):
        edges.append((t // 2 + 1, t // 2 + 1) if t % 2 == 0 else (t // 2 + 2, t // 2 + 1))
    return BipartiteGraph((m + 1) // 2, m // 2, edges)


def path_vertex(t: int) -> VertexId:
    """The vertex at 1-based position t of path_graph."""
    return VertexId.a((t + 1) // 2) if t % 2 == 1 else VertexId.b(t // 2)


def natural(g: BipartiteGraph) -> DualOrdering:
    return DualOrdering(tuple(range(1, g.n_a + 1)), tuple(range(1, g.n_b + 1)))


@pytest.fixture
def fig1():
    return fig1_graph()


@pytest.fixture
def k22():
    return BipartiteGraph(2, 2, [(1, 1), (1, 2), (2, 1), (2, 2)])


@pytest.fixture
def staircase7():
    """The 7-vertex ladder a1:[b1,b2], a2:[b2,b3], a3:[b3,b4]."""
    return BipartiteGraph(3, 4, [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 4)])


@pytest.fixture
def replacement9():
    """The 9-vertex instance a1:[b1,b2], a2:[b2,b4], a3:[b3,b5], a4:{b3}."""
    return BipartiteGraph(
        4,
        5,
        [(1, 1), (1, 2), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5), (4, 3)],
    )


@pytest.fixture
def c6():
    """The 6-cycle as a 3+3 bipartite graph."""
    return BipartiteGraph(3, 3, [(1, 1), (1, 3), (2, 1), (2, 2), (3, 2), (3, 3)])

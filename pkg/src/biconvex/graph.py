"""Immutable bipartite graphs with 1-based indices in each part.

Vertices are addressed as (part, index) pairs so that orderings can permute
indices without relabeling the graph itself.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, NamedTuple

from .errors import DuplicateEdge, IndexOutOfRange

PART_A = "a"
PART_B = "b"


class VertexId(NamedTuple):
    part: str
    index: int

    def __str__(self) -> str:
        return f"{self.part}{self.index}"

    @classmethod
    def a(cls, index: int) -> "VertexId":
        return cls(PART_A, index)

    @classmethod
    def b(cls, index: int) -> "VertexId":
        return cls(PART_B, index)

    @classmethod
    def parse(cls, text: str) -> "VertexId":
        """Parse "a3" / "b12" style vertex names."""
        if len(text) < 2 or text[0] not in (PART_A, PART_B) or not text[1:].isdigit():
            raise ValueError(f"not a vertex name: {text!r}")
        return cls(text[0], int(text[1:]))


class BipartiteGraph:
    """Validated immutable bipartite graph.

    Edges are (a-index, b-index) pairs, 1-based. Adjacency lists are derived
    at construction and sorted, so reading back `edges` returns exactly the
    input edge set in canonical order.
    """

    __slots__ = ("n_a", "n_b", "edges", "_adj_a", "_adj_b", "_edge_set")

    def __init__(self, n_a: int, n_b: int, edges: Iterable[tuple[int, int]]):
        # A part may be empty (the single-vertex graph is e.g. (1, 0, [])),
        # but the graph itself may not be.
        if n_a < 0 or n_b < 0 or n_a + n_b < 1:
            raise ValueError("the graph needs at least one vertex")
        adj_a: list[list[int]] = [[] for _ in range(n_a)]
        adj_b: list[list[int]] = [[] for _ in range(n_b)]
        seen: set[tuple[int, int]] = set()
        for edge in edges:
            a, b = edge
            if not (1 <= a <= n_a):
                raise IndexOutOfRange(f"a-index {a} outside [1, {n_a}]")
            if not (1 <= b <= n_b):
                raise IndexOutOfRange(f"b-index {b} outside [1, {n_b}]")
            if (a, b) in seen:
                raise DuplicateEdge(f"duplicate edge ({a}, {b})")
            seen.add((a, b))
            adj_a[a - 1].append(b)
            adj_b[b - 1].append(a)
        object.__setattr__(self, "n_a", n_a)
        object.__setattr__(self, "n_b", n_b)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "_adj_a", tuple(tuple(sorted(l)) for l in adj_a))
        object.__setattr__(self, "_adj_b", tuple(tuple(sorted(l)) for l in adj_b))
        object.__setattr__(self, "_edge_set", frozenset(seen))

    def __setattr__(self, name, value):
        raise AttributeError("BipartiteGraph is immutable")

    @property
    def n(self) -> int:
        return self.n_a + self.n_b

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"BipartiteGraph(n_a={self.n_a}, n_b={self.n_b}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.n_a, self.n_b, self.edges) == (other.n_a, other.n_b, other.edges)

    def __hash__(self) -> int:
        return hash((self.n_a, self.n_b, self.edges))

    def check_vertex(self, v: VertexId) -> None:
        limit = self.n_a if v.part == PART_A else self.n_b if v.part == PART_B else 0
        if not (1 <= v.index <= limit):
            raise IndexOutOfRange(f"vertex {v} outside the graph")

    def has_edge(self, a_index: int, b_index: int) -> bool:
        return (a_index, b_index) in self._edge_set

    def adjacent(self, u: VertexId, v: VertexId) -> bool:
        if u.part == v.part:
            return False
        if u.part == PART_A:
            return self.has_edge(u.index, v.index)
        return self.has_edge(v.index, u.index)

    def neighbor_indices(self, v: VertexId) -> tuple[int, ...]:
        """Sorted indices (in the opposite part) of v's neighbors."""
        self.check_vertex(v)
        if v.part == PART_A:
            return self._adj_a[v.index - 1]
        return self._adj_b[v.index - 1]

    def neighbors(self, v: VertexId) -> tuple[VertexId, ...]:
        other = PART_B if v.part == PART_A else PART_A
        return tuple(VertexId(other, i) for i in self.neighbor_indices(v))

    def degree(self, v: VertexId) -> int:
        return len(self.neighbor_indices(v))

    def vertices(self) -> Iterator[VertexId]:
        for i in range(1, self.n_a + 1):
            yield VertexId(PART_A, i)
        for j in range(1, self.n_b + 1):
            yield VertexId(PART_B, j)


class SubgraphMap(NamedTuple):
    """Index maps from an induced subgraph back to its parent graph."""

    a_to_parent: tuple[int, ...]
    b_to_parent: tuple[int, ...]


def induced_subgraph(
    g: BipartiteGraph, a_keep: Iterable[int], b_keep: Iterable[int]
) -> tuple[BipartiteGraph, SubgraphMap]:
    """Subgraph induced by the kept indices, with the map back to `g`.

    Kept vertices are renumbered 1..len(kept) in ascending parent order.
    """
    a_sorted = sorted(set(a_keep))
    b_sorted = sorted(set(b_keep))
    for a in a_sorted:
        g.check_vertex(VertexId.a(a))
    for b in b_sorted:
        g.check_vertex(VertexId.b(b))
    if not a_sorted or not b_sorted:
        raise ValueError("induced subgraph must keep at least one vertex per part")
    a_new = {a: i + 1 for i, a in enumerate(a_sorted)}
    b_new = {b: j + 1 for j, b in enumerate(b_sorted)}
    edges = [
        (a_new[a], b_new[b]) for (a, b) in g.edges if a in a_new and b in b_new
    ]
    sub = BipartiteGraph(len(a_sorted), len(b_sorted), edges)
    return sub, SubgraphMap(tuple(a_sorted), tuple(b_sorted))


def transpose(g: BipartiteGraph) -> BipartiteGraph:
    """Swap the roles of the two parts."""
    return BipartiteGraph(g.n_b, g.n_a, [(b, a) for (a, b) in g.edges])


def transpose_vertex(v: VertexId) -> VertexId:
    return VertexId(PART_B if v.part == PART_A else PART_A, v.index)


def bfs_distances(g: BipartiteGraph, source: VertexId) -> dict[VertexId, int]:
    """Hop distances from `source` to every reachable vertex."""
    g.check_vertex(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_distance(g: BipartiteGraph, u: VertexId, v: VertexId) -> int | float:
    """Shortest-path length between u and v; math.inf if disconnected."""
    g.check_vertex(v)
    dist = bfs_distances(g, u)
    return dist.get(v, math.inf)


def is_connected(g: BipartiteGraph) -> bool:
    """True iff one traversal reaches all n_a + n_b vertices."""
    start = VertexId.a(1) if g.n_a else VertexId.b(1)
    return len(bfs_distances(g, start)) == g.n

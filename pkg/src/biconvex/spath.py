"""Straight shortest paths under a biconvex straight ordering.

A path is straight when no two of its edges cross under the ordering. Any
path whose per-part position sequences both strictly increase (or both
strictly decrease) is straight, so the search sweeps the shortest-path level
structure monotonically in both directions; a pairwise-checked exhaustive
scan over the same level structure backs it up in case neither sweep hits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import (
    BudgetExceeded,
    InternalProofViolation,
    NoStraightShortestPath,
    NotAPath,
    NotConnected,
    OrderingNotStraight,
)
from .graph import PART_A, BipartiteGraph, VertexId, bfs_distances
from .orderings import DualOrdering, is_biconvex, is_s_ordering

FALLBACK_EXPANSION_CAP = 1_000_000


@dataclass(frozen=True)
class StraightPath:
    """An alternating path certified cross-edge-free under an ordering."""

    vertices: tuple[VertexId, ...]
    ordering: DualOrdering

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.vertices)


def _path_edges(p: Sequence[VertexId]) -> list[tuple[int, int]]:
    edges = []
    for u, v in zip(p, p[1:]):
        a, b = (u, v) if u.part == PART_A else (v, u)
        edges.append((a.index, b.index))
    return edges


def _check_path(g: BipartiteGraph, p: Sequence[VertexId]) -> None:
    if not p:
        raise NotAPath("empty vertex sequence")
    for v in p:
        g.check_vertex(v)
    if len(set(p)) != len(p):
        raise NotAPath("repeated vertex")
    for u, v in zip(p, p[1:]):
        if not g.adjacent(u, v):
            raise NotAPath(f"{u} and {v} are not adjacent")


def is_s_path(g: BipartiteGraph, d: DualOrdering, p: Sequence[VertexId]) -> bool:
    """True iff no two edges of the path `p` cross under `d`."""
    _check_path(g, p)
    d.check_sizes(g)
    for (a1, b1), (a2, b2) in combinations(_path_edges(p), 2):
        da = d.pos(VertexId.a(a1)) - d.pos(VertexId.a(a2))
        db = d.pos(VertexId.b(b1)) - d.pos(VertexId.b(b2))
        if da * db < 0:
            return False
    return True


def _is_monotone(d: DualOrdering, p: Sequence[VertexId]) -> bool:
    """Each part's position subsequence strictly monotone (either direction)."""
    for part_vertices in ([v for v in p if v.part == PART_A], [v for v in p if v.part != PART_A]):
        ps = [d.pos(v) for v in part_vertices]
        if len(ps) >= 2:
            inc = all(x < y for x, y in zip(ps, ps[1:]))
            dec = all(x > y for x, y in zip(ps, ps[1:]))
            if not (inc or dec):
                return False
    return True


def _require_straight_ordering(g: BipartiteGraph, d: DualOrdering) -> None:
    d.check_sizes(g)
    if d.verified_biconvex and d.verified_straight:
        return
    if not is_biconvex(g, d) or not is_s_ordering(g, d):
        raise OrderingNotStraight("a verified biconvex straight ordering is required")


def _level_dag(
    g: BipartiteGraph, dist_u: dict[VertexId, int], dist_v: dict[VertexId, int], total: int
) -> dict[VertexId, list[VertexId]]:
    """Forward adjacency of the u->v shortest-path level graph."""
    dag: dict[VertexId, list[VertexId]] = {}
    for w, dw in dist_u.items():
        if dist_v.get(w, math.inf) + dw != total:
            continue
        succ = [
            x
            for x in g.neighbors(w)
            if dist_u.get(x) == dw + 1 and dist_v.get(x, math.inf) + dw + 1 == total
        ]
        dag[w] = sorted(succ)
    return dag


def _monotone_sweep(
    d: DualOrdering,
    dag: dict[VertexId, list[VertexId]],
    u: VertexId,
    v: VertexId,
    increasing: bool,
) -> tuple[VertexId, ...] | None:
    """Lexicographically smallest monotone DAG path from u to v, if any.

    A step is legal when the new vertex's position beats the position of the
    previous same-part vertex (two steps back) in the sweep direction.
    Feasibility to reach v is memoized on (vertex, predecessor) states so the
    greedy forward walk never dead-ends.
    """

    def legal(nxt: VertexId, prev: VertexId | None) -> bool:
        if prev is None:
            return True
        return d.pos(nxt) > d.pos(prev) if increasing else d.pos(nxt) < d.pos(prev)

    feasible: dict[tuple[VertexId, VertexId | None], bool] = {}

    def can_finish(cur: VertexId, prev: VertexId | None) -> bool:
        if cur == v:
            return True
        key = (cur, prev)
        if key not in feasible:
            feasible[key] = False  # cycle-safe default; the DAG is acyclic anyway
            feasible[key] = any(
                can_finish(nxt, cur) for nxt in dag.get(cur, ()) if legal(nxt, prev)
            )
        return feasible[key]

    if not can_finish(u, None):
        return None
    path = [u]
    prev: VertexId | None = None
    while path[-1] != v:
        cur = path[-1]
        step = next(
            nxt for nxt in dag.get(cur, ()) if legal(nxt, prev) and can_finish(nxt, cur)
        )
        prev = cur
        path.append(step)
    return tuple(path)


def _b_index_sequence(p: Sequence[VertexId]) -> tuple[int, ...]:
    return tuple(v.index for v in p if v.part != PART_A)


def _exhaustive_scan(
    g: BipartiteGraph,
    d: DualOrdering,
    dag: dict[VertexId, list[VertexId]],
    u: VertexId,
    v: VertexId,
) -> tuple[VertexId, ...] | None:
    """DFS every shortest path in index order, pairwise cross-checking each."""
    expansions = 0
    stack: list[VertexId] = [u]

    def walk() -> tuple[VertexId, ...] | None:
        nonlocal expansions
        if stack[-1] == v:
            if is_s_path(g, d, stack):
                return tuple(stack)
            return None
        for nxt in dag.get(stack[-1], ()):
            expansions += 1
            if expansions > FALLBACK_EXPANSION_CAP:
                raise BudgetExceeded("straight-path fallback scan exceeded its cap")
            stack.append(nxt)
            found = walk()
            stack.pop()
            if found is not None:
                return found
        return None

    return walk()


def shortest_s_path(
    g: BipartiteGraph, d: DualOrdering, u: VertexId, v: VertexId
) -> StraightPath:
    """A shortest u-v path that is straight under `d`.

    The returned path has length exactly bfs_distance(u, v), passes
    is_s_path, and has strictly monotone per-part position sequences. Among
    equal candidates the sweep picks the lexicographically smallest vertex
    sequence, B-positions driving the choice on B-steps.
    """
    _require_straight_ordering(g, d)
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return StraightPath((u,), d)
    dist_u = bfs_distances(g, u)
    if v not in dist_u:
        raise NotConnected(f"{u} and {v} lie in different components")
    dist_v = bfs_distances(g, v)
    total = dist_u[v]
    dag = _level_dag(g, dist_u, dist_v, total)

    candidates = []
    for increasing in (True, False):
        found = _monotone_sweep(d, dag, u, v, increasing)
        if found is not None:
            candidates.append(found)
    if candidates:
        best = min(candidates, key=lambda p: (_b_index_sequence(p), p))
    else:
        best = _exhaustive_scan(g, d, dag, u, v)
        if best is None:
            raise NoStraightShortestPath(
                f"no shortest {u}-{v} path is straight; the ordering cannot be a "
                "biconvex straight ordering"
            )
    if len(best) - 1 != total or not _is_monotone(d, best):
        raise InternalProofViolation("straight-path search produced a malformed path")
    if not is_s_path(g, d, best):
        raise InternalProofViolation("straight-path search produced a crossing path")
    return StraightPath(best, d)

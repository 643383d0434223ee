"""Brute-force ground truth at desk scale.

These routines certify the main algorithms by exhaustion and deliberately
share no code with them beyond the graph primitives: biconvexity is decided
by scanning raw permutations, spanning caterpillars by enumerating spanning
trees, and the small-tree facts by enumerating labeled trees.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from itertools import permutations, product
from math import factorial
from typing import Iterator, NamedTuple

from .caterpillar import is_caterpillar
from .errors import BudgetExceeded, NotConnected
from .graph import BipartiteGraph, VertexId, is_connected
from .orderings import DualOrdering


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12
    max_trees: int = 2_000_000
    time_cap: float = 120.0  # seconds


DEFAULT_ORACLE_BUDGET = OracleBudget()


def iter_spanning_trees(
    g: BipartiteGraph, budget: OracleBudget = DEFAULT_ORACLE_BUDGET
) -> Iterator[list[tuple[VertexId, VertexId]]]:
    """Backtracking enumeration of every spanning tree of g.

    Each edge is included or excluded in turn; inclusion is pruned on cycles
    and exclusion is pruned when the remaining edges cannot connect the
    graph. Raises BudgetExceeded on any exceeded budget dimension.
    """
    if not is_connected(g):
        raise NotConnected("spanning trees exist only for connected graphs")
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceed the oracle cap of {budget.max_vertices}")
    deadline = time.monotonic() + budget.time_cap
    vertex_ids = {v: i for i, v in enumerate(g.vertices())}
    edge_pairs = [
        (vertex_ids[VertexId.a(a)], vertex_ids[VertexId.b(b)]) for (a, b) in g.edges
    ]
    edge_vertices = [(VertexId.a(a), VertexId.b(b)) for (a, b) in g.edges]
    n, m = g.n, len(edge_pairs)
    emitted = 0

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def connectable(chosen: list[int], start: int) -> bool:
        parent = list(range(n))
        components = n
        for idx in chosen:
            u, v = edge_pairs[idx]
            ru, rv = find(parent, u), find(parent, v)
            if ru != rv:
                parent[ru] = rv
                components -= 1
        for idx in range(start, m):
            u, v = edge_pairs[idx]
            ru, rv = find(parent, u), find(parent, v)
            if ru != rv:
                parent[ru] = rv
                components -= 1
        return components == 1

    def walk(idx: int, parent: list[int], chosen: list[int]):
        nonlocal emitted
        if time.monotonic() > deadline:
            raise BudgetExceeded("oracle time cap hit during spanning-tree enumeration")
        if len(chosen) == n - 1:
            emitted += 1
            if emitted > budget.max_trees:
                raise BudgetExceeded("oracle tree cap hit")
            yield [edge_vertices[i] for i in chosen]
            return
        if m - idx < n - 1 - len(chosen):
            return
        u, v = edge_pairs[idx]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            child = list(parent)
            child[ru] = rv
            chosen.append(idx)
            yield from walk(idx + 1, child, chosen)
            chosen.pop()
        if connectable(chosen, idx + 1):
            yield from walk(idx + 1, parent, chosen)

    yield from walk(0, list(range(n)), [])


class CaterpillarScan(NamedTuple):
    found: bool
    trees_examined: int


def oracle_caterpillar_scan(
    g: BipartiteGraph, budget: OracleBudget = DEFAULT_ORACLE_BUDGET
) -> CaterpillarScan:
    """Scan spanning trees until one is a caterpillar, counting the attempts."""
    examined = 0
    vertices = list(g.vertices())
    for tree in iter_spanning_trees(g, budget):
        examined += 1
        if is_caterpillar(tree, vertices):
            return CaterpillarScan(True, examined)
    return CaterpillarScan(False, examined)


def oracle_has_spanning_caterpillar(
    g: BipartiteGraph, budget: OracleBudget = DEFAULT_ORACLE_BUDGET
) -> bool:
    """True iff some spanning tree of g is a caterpillar."""
    return oracle_caterpillar_scan(g, budget).found


class BiconvexScan(NamedTuple):
    ordering: DualOrdering | None
    pair_space: int  # number of (A-order, B-order) pairs the verdict covers


_ORACLE_PART_CAP = 6


def oracle_biconvex_scan(g: BipartiteGraph) -> BiconvexScan:
    """Exhaustive dual-permutation scan for a biconvex ordering.

    The two requirements factor: an A-order must make every B-neighborhood
    consecutive and a B-order every A-neighborhood, independently. Scanning
    each factor fully therefore covers the whole n_a! * n_b! pair space:
    a hit in both factors combines into a witness, a miss in either rules
    out every pair.
    """
    if g.n_a > _ORACLE_PART_CAP or g.n_b > _ORACLE_PART_CAP:
        raise BudgetExceeded(
            f"oracle scans parts of at most {_ORACLE_PART_CAP}; "
            f"got {g.n_a} x {g.n_b}"
        )
    pair_space = factorial(g.n_a) * factorial(g.n_b)

    def consecutive_everywhere(order: tuple[int, ...], rows) -> bool:
        position = {v: p for p, v in enumerate(order)}
        for row in rows:
            if len(row) <= 1:
                continue
            spots = [position[x] for x in row]
            if max(spots) - min(spots) + 1 != len(spots):
                return False
        return True

    a_witness = next(
        (
            sigma
            for sigma in permutations(range(1, g.n_a + 1))
            if consecutive_everywhere(sigma, g._adj_b)
        ),
        None,
    )
    if a_witness is None:
        return BiconvexScan(None, pair_space)
    b_witness = next(
        (
            tau
            for tau in permutations(range(1, g.n_b + 1))
            if consecutive_everywhere(tau, g._adj_a)
        ),
        None,
    )
    if b_witness is None:
        return BiconvexScan(None, pair_space)
    d = DualOrdering(a_witness, b_witness)
    d.verified_biconvex = True
    return BiconvexScan(d, pair_space)


def oracle_is_biconvex(g: BipartiteGraph) -> DualOrdering | None:
    """Witness ordering from the exhaustive scan, or None proven by exhaustion."""
    return oracle_biconvex_scan(g).ordering


def _prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapify(heap)
    edges = []
    for x in seq:
        leaf = heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heappush(heap, x)
    u = heappop(heap)
    v = heappop(heap)
    edges.append((u, v))
    return edges


def _canonical_rooted(adj: dict[int, list[int]], root: int, parent: int) -> str:
    parts = sorted(
        _canonical_rooted(adj, child, root) for child in adj[root] if child != parent
    )
    return "(" + "".join(parts) + ")"


def _tree_centers(n: int, edges: list[tuple[int, int]]) -> list[int]:
    if n <= 2:
        return list(range(n))
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    remaining = set(range(n))
    leaves = [v for v in remaining if len(adj[v]) == 1]
    while len(remaining) > 2:
        fresh = []
        for leaf in leaves:
            remaining.discard(leaf)
            (nb,) = adj[leaf]
            adj[nb].discard(leaf)
            adj[leaf].clear()
            if nb in remaining and len(adj[nb]) == 1:
                fresh.append(nb)
        leaves = fresh
    return sorted(remaining)


def canonical_tree_form(n: int, edges: list[tuple[int, int]]) -> str:
    """Label-invariant encoding; equal strings mean isomorphic trees."""
    if n == 1:
        return "()"
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return min(_canonical_rooted(adj, c, -1) for c in _tree_centers(n, edges))


def enumerate_trees(
    n: int, up_to_isomorphism: bool = False
) -> list[list[tuple[int, int]]]:
    """All labeled trees on vertices 0..n-1 (n <= 8), optionally deduplicated.

    Uses the bijection with length-(n-2) vertex sequences, so the count is
    n**(n-2) in labeled mode.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > 8:
        raise BudgetExceeded("labeled-tree enumeration is capped at n = 8")
    if n == 1:
        return [[]]
    trees = [
        _prufer_decode(seq, n) for seq in product(range(n), repeat=n - 2)
    ]
    if not up_to_isomorphism:
        return trees
    seen: set[str] = set()
    unique = []
    for tree in trees:
        form = canonical_tree_form(n, tree)
        if form not in seen:
            seen.add(form)
            unique.append(tree)
    return unique

"""Seeded instance generation for tests, fuzzing, and the CLI.

All randomness comes from ``random.Random(seed)`` (MT19937) using integer
draws only, so a given GenSpec reproduces the same graph byte-for-byte on
every platform and run. Draw order is part of the contract and documented
per generator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InternalProofViolation
from .graph import BipartiteGraph
from .orderings import DualOrdering, is_biconvex, is_s_ordering


@dataclass(frozen=True)
class GenSpec:
    """A reproducible instance recipe."""

    kind: str  # staircase | chain | random_bipartite | fig1
    n_a: int = 1
    n_b: int = 1
    density: float = 0.5
    seed: int = 0

    KINDS = ("staircase", "chain", "random_bipartite", "fig1")


def _verified_natural_ordering(g: BipartiteGraph, label: str) -> DualOrdering:
    d = DualOrdering(tuple(range(1, g.n_a + 1)), tuple(range(1, g.n_b + 1)))
    if not is_biconvex(g, d) or not is_s_ordering(g, d):
        raise InternalProofViolation(f"{label} generator produced a bad instance")
    return d


def gen_staircase(n_a: int, n_b: int, seed: int) -> tuple[BipartiteGraph, DualOrdering]:
    """Connected staircase instance: monotone overlapping neighbor intervals.

    A-vertex i is joined to the interval [l_i, r_i] of B, with both endpoint
    sequences non-decreasing, consecutive intervals overlapping, l_1 = 1 and
    r_last = n_b. The natural orders are returned verified biconvex and
    straight. Draws: per A-vertex one randint for r, then one for l.
    """
    if n_a < 1 or n_b < 1:
        raise ValueError("part sizes must be positive")
    rng = random.Random(seed)
    span = max(1, (2 * n_b + n_a - 1) // n_a)
    lo, hi = 1, 0
    intervals = []
    for i in range(n_a):
        hi = rng.randint(max(hi, lo), min(n_b, max(hi, lo) + span))
        if i == n_a - 1:
            hi = n_b
        if i > 0:
            lo = rng.randint(lo, min(hi, intervals[-1][1]))
        intervals.append((lo, hi))
    edges = [(i + 1, b) for i, (l, r) in enumerate(intervals) for b in range(l, r + 1)]
    g = BipartiteGraph(n_a, n_b, edges)
    return g, _verified_natural_ordering(g, "staircase")


def gen_chain(n_a: int, n_b: int, seed: int) -> tuple[BipartiteGraph, DualOrdering]:
    """Connected chain instance: neighborhoods nested along the A-order.

    A-vertex i is joined to the last s_i vertices of B with s_1 <= ... <=
    s_last = n_b, so N(a_i) is a subset of N(a_j) whenever i < j. The
    returned ordering runs B in reverse: that aligns the nested suffixes
    into forward-growing intervals, which keeps shortest paths monotone on
    top of being biconvex and straight. Draws: n_a randints in [1, n_b],
    sorted.
    """
    if n_a < 1 or n_b < 1:
        raise ValueError("part sizes must be positive")
    rng = random.Random(seed)
    sizes = sorted(rng.randint(1, n_b) for _ in range(n_a))
    sizes[-1] = n_b
    edges = [
        (i + 1, b)
        for i, s in enumerate(sizes)
        for b in range(n_b - s + 1, n_b + 1)
    ]
    g = BipartiteGraph(n_a, n_b, edges)
    d = DualOrdering(tuple(range(1, n_a + 1)), tuple(range(n_b, 0, -1)))
    if not is_biconvex(g, d) or not is_s_ordering(g, d):
        raise InternalProofViolation("chain generator produced a bad instance")
    return g, d


def gen_random_bipartite(n_a: int, n_b: int, density: float, seed: int) -> BipartiteGraph:
    """Independent edges with the given probability; no structure guaranteed.

    Draws: one rng.random() per potential edge, a-major order (a=1..n_a,
    inner b=1..n_b).
    """
    if not 0 < density <= 1:
        raise ValueError("density must lie in (0, 1]")
    rng = random.Random(seed)
    edges = [
        (a, b)
        for a in range(1, n_a + 1)
        for b in range(1, n_b + 1)
        if rng.random() < density
    ]
    return BipartiteGraph(n_a, n_b, edges)


def fig1_graph() -> BipartiteGraph:
    """The 7-vertex convex graph without a spanning caterpillar.

    One A-vertex sees all of B while three others each hang off a single
    B-vertex; it is its own unique spanning tree and that tree is a spider.
    """
    return BipartiteGraph(4, 3, [(1, 1), (1, 2), (1, 3), (2, 1), (3, 2), (4, 3)])


def generate(spec: GenSpec) -> tuple[BipartiteGraph, DualOrdering | None]:
    """Dispatch a GenSpec; structured kinds include their verified ordering."""
    if spec.kind == "staircase":
        return gen_staircase(spec.n_a, spec.n_b, spec.seed)
    if spec.kind == "chain":
        return gen_chain(spec.n_a, spec.n_b, spec.seed)
    if spec.kind == "random_bipartite":
        return gen_random_bipartite(spec.n_a, spec.n_b, spec.density, spec.seed), None
    if spec.kind == "fig1":
        return fig1_graph(), None
    raise ValueError(f"unknown kind {spec.kind!r}; expected one of {GenSpec.KINDS}")


def _intervals_graph(n_b: int, intervals: list[tuple[int, int]]) -> BipartiteGraph:
    edges = [(i + 1, b) for i, (l, r) in enumerate(intervals) for b in range(l, r + 1)]
    return BipartiteGraph(len(intervals), n_b, edges)


def caterpillar_case_fixtures() -> dict[str, tuple[BipartiteGraph, DualOrdering]]:
    """Hand-built instances steering the builder into every construction branch.

    The seeded families cannot reach the replacement branches (their interval
    staircases always keep the extreme A-vertices attached to the spine), so
    those cases get dedicated instances. Keys name the branch the instance
    is designed to exercise under its natural orders.
    """
    fixtures: dict[str, BipartiteGraph] = {
        # Two-vertex hub spine: extreme pairs of both parts share neighbors.
        "common_both": _intervals_graph(5, [(1, 4), (1, 5)]),
        # Only the A-extremes share a neighbor.
        "common_one": _intervals_graph(4, [(1, 2), (2, 4), (2, 2)]),
        # Only the B-extremes share a neighbor (transposed shape of the above).
        "common_one_swapped": BipartiteGraph(
            4, 3, [(1, 1), (2, 1), (2, 2), (2, 3), (3, 2), (4, 2)]
        ),
        # Hamiltonian straight path, nothing left over.
        "spath_plain": _intervals_graph(4, [(1, 2), (2, 3), (3, 4)]),
        # The last A-vertex only reaches an off-path B-vertex: right swap.
        "spath_replace_right": _intervals_graph(4, [(1, 2), (2, 4), (3, 3)]),
        # Mirror image: left swap.
        "spath_replace_left": _intervals_graph(4, [(2, 2), (1, 3), (3, 4)]),
        # Both overhangs force swaps.
        "spath_replace_both": _intervals_graph(5, [(2, 2), (1, 3), (3, 5), (4, 4)]),
        # Off-path neighbor reachable through the straight path itself: the
        # swap is avoidable and the plain branch must absorb the overhang.
        "spath_direct_attach": _intervals_graph(
            5, [(1, 2), (2, 4), (3, 5), (3, 3)]
        ),
    }
    out = {}
    for name, g in fixtures.items():
        out[name] = (g, _verified_natural_ordering(g, name))
    return out

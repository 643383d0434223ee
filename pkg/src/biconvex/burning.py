"""Graph burning: schedules, an exact solver, and caterpillar-derived bounds.

A schedule (x_1, ..., x_k) burns the graph when the balls of radius k - i
around the round-i sources cover every vertex; that coverage view is
equivalent to the spreading-fire process and is what the solver searches
over. Sources may repeat, which changes nothing about the minimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .caterpillar import (
    Caterpillar,
    build_spanning_caterpillar,
    verify_spanning_caterpillar,
)
from .errors import (
    ExceedsKMax,
    FallbackExhausted,
    InternalProofViolation,
    NotConnected,
)
from .graph import PART_A, PART_B, BipartiteGraph, VertexId, bfs_distances, is_connected


@dataclass(frozen=True)
class BurnSchedule:
    """Ordered ignition sources; the round-i source spreads for k - i rounds."""

    sources: tuple[VertexId, ...]

    def __len__(self) -> int:
        return len(self.sources)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.sources)


def ceil_sqrt(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return math.isqrt(n - 1) + 1


def ball(g: BipartiteGraph, v: VertexId, r: int) -> set[VertexId]:
    """All vertices at distance at most r from v."""
    g.check_vertex(v)
    if r < 0:
        raise ValueError("radius must be non-negative")
    return {w for w, dw in bfs_distances(g, v).items() if dw <= r}


def is_burning_schedule(g: BipartiteGraph, s: BurnSchedule) -> bool:
    """Coverage check: the radius-(k-i) balls of the sources cover the graph."""
    k = len(s.sources)
    burned: set[VertexId] = set()
    for i, source in enumerate(s.sources, start=1):
        burned |= ball(g, source, k - i)
    return len(burned) == g.n


def simulate_burning(g: BipartiteGraph, sources: Sequence[VertexId]) -> bool:
    """Round-by-round fire spread; independent twin of is_burning_schedule.

    Each round the fire first spreads one hop from everything burned, then
    the next source ignites. Used to cross-check the coverage formulation.
    """
    burned: set[VertexId] = set()
    for round_no, source in enumerate(sources, start=1):
        if round_no > 1:
            frontier = {w for u in burned for w in g.neighbors(u)}
            burned |= frontier
        g.check_vertex(source)
        burned.add(source)
    return len(burned) == g.n


class _BurnSearch:
    """Exact fixed-length search over radius-to-center assignments.

    Radii k-1..0 form the budget; each branch picks which remaining radius
    covers an uncovered pivot vertex and from which center. The pivot is an
    eccentricity-maximal uncovered vertex and larger radii are tried first,
    which keeps the largest ball working on the hardest vertex without ever
    sacrificing completeness.
    """

    def __init__(self, g: BipartiteGraph):
        self.g = g
        self.vertices = sorted(g.vertices())
        self.dist = {v: bfs_distances(g, v) for v in self.vertices}
        self.ecc = {v: max(self.dist[v].values()) for v in self.vertices}
        self._ball_cache: dict[tuple[VertexId, int], frozenset[VertexId]] = {}

    def ball(self, v: VertexId, r: int) -> frozenset[VertexId]:
        key = (v, r)
        if key not in self._ball_cache:
            self._ball_cache[key] = frozenset(
                w for w, dw in self.dist[v].items() if dw <= r
            )
        return self._ball_cache[key]

    def max_ball_size(self, r: int) -> int:
        return max(len(self.ball(v, r)) for v in self.vertices)

    def schedule_for_k(self, k: int) -> dict[int, VertexId] | None:
        """A radius -> center assignment covering the graph, or None."""
        uncovered = frozenset(self.vertices)
        radii = tuple(range(k - 1, -1, -1))
        self._seen: set[tuple[frozenset[VertexId], tuple[int, ...]]] = set()
        return self._extend(uncovered, radii, {})

    def _extend(
        self,
        uncovered: frozenset[VertexId],
        radii: tuple[int, ...],
        chosen: dict[int, VertexId],
    ) -> dict[int, VertexId] | None:
        if not uncovered:
            return dict(chosen)
        if not radii:
            return None
        if sum(self.max_ball_size(r) for r in radii) < len(uncovered):
            return None
        key = (uncovered, radii)
        if key in self._seen:
            return None
        self._seen.add(key)
        pivot = max(uncovered, key=lambda v: (self.ecc[v], v))
        for r in radii:
            remaining = tuple(x for x in radii if x != r)
            for center in self.vertices:
                if self.dist[center][pivot] > r:
                    continue
                chosen[r] = center
                found = self._extend(uncovered - self.ball(center, r), remaining, chosen)
                if found is not None:
                    return found
                del chosen[r]
        return None


def _assignment_to_schedule(
    g: BipartiteGraph, k: int, assignment: dict[int, VertexId]
) -> BurnSchedule:
    filler = VertexId.a(1) if g.n_a else VertexId.b(1)
    sources = tuple(assignment.get(k - i, filler) for i in range(1, k + 1))
    return BurnSchedule(sources)


def burning_schedule_for_k(g: BipartiteGraph, k: int) -> BurnSchedule | None:
    """Exhaustive search for a length-k schedule; None when none exists."""
    if not is_connected(g):
        raise NotConnected("burning search requires a connected graph")
    if k < 1:
        return None
    search = _BurnSearch(g)
    assignment = search.schedule_for_k(k)
    if assignment is None:
        return None
    schedule = _assignment_to_schedule(g, k, assignment)
    if not is_burning_schedule(g, schedule):  # pragma: no cover - solver contract
        raise InternalProofViolation("exact search produced an invalid schedule")
    return schedule


def exact_burning_number(
    g: BipartiteGraph, k_max: int | None = None
) -> tuple[int, BurnSchedule]:
    """The least k admitting a valid schedule, with a witness.

    Iterative deepening from a ball-capacity lower bound up to k_max
    (default: ceil(sqrt(n)) + 2). Raises ExceedsKMax when no k in range
    works.
    """
    if not is_connected(g):
        raise NotConnected("the burning number is defined for connected graphs")
    if k_max is None:
        k_max = ceil_sqrt(g.n) + 2
    search = _BurnSearch(g)
    k_lo = 1
    while k_lo <= k_max and sum(search.max_ball_size(r) for r in range(k_lo)) < g.n:
        k_lo += 1
    for k in range(k_lo, k_max + 1):
        assignment = search.schedule_for_k(k)
        if assignment is not None:
            schedule = _assignment_to_schedule(g, k, assignment)
            if not is_burning_schedule(g, schedule):  # pragma: no cover
                raise InternalProofViolation("exact search produced an invalid schedule")
            return k, schedule
    raise ExceedsKMax(f"no burning schedule of length <= {k_max} exists")


def _greedy_spine_schedule(
    g: BipartiteGraph, c: Caterpillar, k: int
) -> list[VertexId] | None:
    """Left-to-right spine covering with radii k-1..0, in the tree metric.

    A radius-r source at spine position q covers spine positions within r
    and legs attached within r - 1, so the source for the leftmost uncovered
    position p is centered r - 1 further right. Tree distances dominate
    graph distances, so success here implies a valid schedule for g.
    """
    spine = list(c.spine)
    length = len(spine)
    legs_at: dict[int, list[VertexId]] = {t: [] for t in range(length)}
    spot = {v: t for t, v in enumerate(spine)}
    for leg, anchor in sorted(c.legs.items()):
        legs_at[spot[anchor]].append(leg)
    spine_done = [False] * length
    legs_done: set[VertexId] = set()
    sources: list[VertexId] = []

    def leftmost_uncovered() -> int | None:
        for t in range(length):
            if not spine_done[t] or any(l not in legs_done for l in legs_at[t]):
                return t
        return None

    for i in range(1, k + 1):
        p = leftmost_uncovered()
        if p is None:
            break
        r = k - i
        if r == 0:
            if not spine_done[p]:
                source = spine[p]
                spine_done[p] = True
            else:
                source = next(l for l in legs_at[p] if l not in legs_done)
                legs_done.add(source)
            sources.append(source)
            continue
        q = min(p + r - 1, length - 1)
        for t in range(max(0, q - r), min(length, q + r + 1)):
            spine_done[t] = True
            if abs(t - q) <= r - 1:
                legs_done.update(legs_at[t])
        sources.append(spine[q])
    if leftmost_uncovered() is not None:
        return None
    while len(sources) < k:
        filler = next(
            (v for v in sorted(g.vertices()) if v not in sources), sorted(g.vertices())[0]
        )
        sources.append(filler)
    return sources


def schedule_from_caterpillar(g: BipartiteGraph, c: Caterpillar) -> BurnSchedule:
    """A valid schedule for g derived from its spanning caterpillar.

    Tries greedy spine covering at every target length up to ceil(sqrt(n)),
    then falls back to the exact fixed-length search at that bound. Raises
    FallbackExhausted when even the fallback fails, reporting how far the
    greedy pass got.
    """
    if not verify_spanning_caterpillar(g, c):
        raise ValueError("the caterpillar does not verify against the graph")
    bound = ceil_sqrt(g.n)
    for k in range(1, bound + 1):
        sources = _greedy_spine_schedule(g, c, k)
        if sources is not None:
            schedule = BurnSchedule(tuple(sources))
            if not is_burning_schedule(g, schedule):  # pragma: no cover
                raise InternalProofViolation("greedy spine schedule failed validation")
            return schedule
    fallback = burning_schedule_for_k(g, bound)
    if fallback is not None:
        return fallback
    greedy_length = _greedy_length(g, c)
    raise FallbackExhausted(
        f"no schedule of length <= {bound} found (greedy needs {greedy_length})",
        greedy_length=greedy_length,
    )


def _greedy_length(g: BipartiteGraph, c: Caterpillar) -> int:
    # A radius-(n-1) ball covers the whole graph, so this always terminates.
    for k in range(1, g.n + 1):
        if _greedy_spine_schedule(g, c, k) is not None:
            return k
    return g.n


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of checking the square-root burning bound on one instance."""

    n: int
    bound: int
    schedule: BurnSchedule
    exact: int | None
    ok: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "bound": self.bound,
            "schedule": [str(v) for v in self.schedule.sources],
            "len": len(self.schedule),
            "exact_b": self.exact,
            "pass": self.ok,
        }


def check_conjecture(
    g: BipartiteGraph, d, exact_threshold: int = 16
) -> ConjectureReport:
    """Build the caterpillar, derive a schedule, and test the sqrt bound.

    The exact burning number is computed only for n <= exact_threshold;
    above that the schedule length alone is checked against the bound.
    """
    c, _ = build_spanning_caterpillar(g, d)
    schedule = schedule_from_caterpillar(g, c)
    bound = ceil_sqrt(g.n)
    exact: int | None = None
    if g.n <= exact_threshold:
        exact, _ = exact_burning_number(g, k_max=bound + 2)
    ok = len(schedule) <= bound and (exact is None or exact <= bound)
    return ConjectureReport(n=g.n, bound=bound, schedule=schedule, exact=exact, ok=ok)

"""Convex, biconvex, and straight orderings of bipartite graphs.

A dual ordering is a pair of permutations, one per part. It is biconvex when
every vertex's neighborhood occupies consecutive positions on the opposite
side, and straight when every pair of crossing edges is rectified by one of
the two axis-parallel edges on the same four endpoints.

Recognition here is search-based and budget-capped: asymptotically fast
recognition is out of scope, exhaustive certainty at desk scale is not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import NamedTuple

from .errors import BudgetExceeded, InvalidPermutation, NotConnected
from .graph import PART_A, PART_B, BipartiteGraph, VertexId, is_connected

DEFAULT_BUDGET = 600_000


@dataclass
class DualOrdering:
    """A permutation of each part, with verification flags.

    order_a / order_b list the vertex indices of each part in order: the
    vertex at position p (0-based) of part A is ``order_a[p]``. Flags are set
    by the verifying predicates, never by construction.
    """

    order_a: tuple[int, ...]
    order_b: tuple[int, ...]
    verified_biconvex: bool = False
    verified_straight: bool = False
    _pos_a: dict[int, int] = field(init=False, repr=False, compare=False)
    _pos_b: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        self.order_a = tuple(self.order_a)
        self.order_b = tuple(self.order_b)
        for order in (self.order_a, self.order_b):
            if sorted(order) != list(range(1, len(order) + 1)):
                raise InvalidPermutation(f"not a permutation of 1..{len(order)}: {order}")
        self._pos_a = {v: p for p, v in enumerate(self.order_a)}
        self._pos_b = {v: p for p, v in enumerate(self.order_b)}

    def check_sizes(self, g: BipartiteGraph) -> None:
        if len(self.order_a) != g.n_a or len(self.order_b) != g.n_b:
            raise InvalidPermutation(
                f"ordering sizes ({len(self.order_a)}, {len(self.order_b)}) "
                f"do not match graph parts ({g.n_a}, {g.n_b})"
            )

    def pos(self, v: VertexId) -> int:
        """0-based position of a vertex within its part's ordering."""
        pos = self._pos_a if v.part == PART_A else self._pos_b
        try:
            return pos[v.index]
        except KeyError:
            raise InvalidPermutation(f"vertex {v} not covered by the ordering") from None

    def first(self, part: str) -> VertexId:
        order = self.order_a if part == PART_A else self.order_b
        return VertexId(part, order[0])

    def last(self, part: str) -> VertexId:
        order = self.order_a if part == PART_A else self.order_b
        return VertexId(part, order[-1])

    def reversed(self, part_a: bool = True, part_b: bool = True) -> "DualOrdering":
        return DualOrdering(
            self.order_a[::-1] if part_a else self.order_a,
            self.order_b[::-1] if part_b else self.order_b,
        )

    def transposed(self) -> "DualOrdering":
        d = DualOrdering(self.order_b, self.order_a)
        d.verified_biconvex = self.verified_biconvex
        d.verified_straight = self.verified_straight
        return d


class CrossPair(NamedTuple):
    """Two edges whose endpoint orders disagree under a dual ordering."""

    edge1: tuple[int, int]
    edge2: tuple[int, int]


def _neighborhood_consecutive(positions: list[int]) -> bool:
    if len(positions) <= 1:
        return True
    return max(positions) - min(positions) + 1 == len(positions)


def is_convex_side(g: BipartiteGraph, order: tuple[int, ...], side: str) -> bool:
    """True iff every `side` vertex has a consecutive neighborhood under `order`.

    `order` permutes the part opposite to `side`; empty neighborhoods and
    singletons count as consecutive.
    """
    if side == PART_A:
        expected, rows = g.n_b, g._adj_a
    elif side == PART_B:
        expected, rows = g.n_a, g._adj_b
    else:
        raise ValueError(f"side must be {PART_A!r} or {PART_B!r}")
    if sorted(order) != list(range(1, expected + 1)):
        raise InvalidPermutation(f"not a permutation of 1..{expected}: {order}")
    pos = {v: p for p, v in enumerate(order)}
    return all(_neighborhood_consecutive([pos[w] for w in row]) for row in rows)


def is_biconvex(g: BipartiteGraph, d: DualOrdering) -> bool:
    """Both one-sided convexity checks; sets the verified flag on success."""
    d.check_sizes(g)
    ok = is_convex_side(g, d.order_b, PART_A) and is_convex_side(g, d.order_a, PART_B)
    if ok:
        d.verified_biconvex = True
    return ok


def find_cross_pairs(g: BipartiteGraph, d: DualOrdering) -> list[CrossPair]:
    """All unordered crossing edge pairs, sorted by a-position then b-position."""
    d.check_sizes(g)
    ranked = sorted(g.edges, key=lambda e: (d._pos_a[e[0]], d._pos_b[e[1]]))
    out = []
    for i, (a1, b1) in enumerate(ranked):
        pa1, pb1 = d._pos_a[a1], d._pos_b[b1]
        for a2, b2 in ranked[i + 1 :]:
            if d._pos_a[a2] > pa1 and d._pos_b[b2] < pb1:
                out.append(CrossPair((a1, b1), (a2, b2)))
    return out


def _interval(d: DualOrdering, row: tuple[int, ...]) -> tuple[int, int] | None:
    if not row:
        return None
    positions = [d._pos_b[b] for b in row]
    return min(positions), max(positions)


def _setminus_extremes(u: tuple[int, int], v: tuple[int, int]) -> tuple[int | None, int | None]:
    """(min, max) of the interval difference u \\ v, None when empty."""
    lo = u[0] if u[0] < v[0] else (max(u[0], v[1] + 1) if v[1] < u[1] else None)
    hi = u[1] if u[1] > v[1] else (min(u[1], v[0] - 1) if u[0] < v[0] else None)
    return lo, hi


def is_s_ordering(g: BipartiteGraph, d: DualOrdering) -> bool:
    """True iff every crossing edge pair is rectified.

    For a crossing pair (a_i, b_s), (a_j, b_r) with a_i before a_j and b_r
    before b_s, at least one of (a_i, b_r) and (a_j, b_s) must be an edge.
    The verified_straight flag is set only when the ordering is also a
    verified biconvex one.
    """
    d.check_sizes(g)
    biconvex = d.verified_biconvex or is_biconvex(g, d)
    if biconvex:
        ok = _straight_by_intervals(g, d)
    else:
        ok = _straight_by_edge_scan(g, d)
    if ok and biconvex:
        d.verified_straight = True
    return ok


def _straight_by_intervals(g: BipartiteGraph, d: DualOrdering) -> bool:
    # Valid only for biconvex d: each neighborhood is an interval of b-positions.
    # A violating pair for A-vertices u before v is a u-edge at position s and a
    # v-edge at position r with r < s, s not in v's interval, r not in u's.
    spans = [_interval(d, g._adj_a[a - 1]) for a in d.order_a]
    for i, u in enumerate(spans):
        if u is None:
            continue
        for v in spans[i + 1 :]:
            if v is None:
                continue
            r_min, _ = _setminus_extremes(v, u)
            _, s_max = _setminus_extremes(u, v)
            if r_min is not None and s_max is not None and r_min < s_max:
                return False
    return True


def _straight_by_edge_scan(g: BipartiteGraph, d: DualOrdering) -> bool:
    for (a1, b1), (a2, b2) in combinations(g.edges, 2):
        da = d._pos_a[a1] - d._pos_a[a2]
        db = d._pos_b[b1] - d._pos_b[b2]
        if da * db < 0 and not (g.has_edge(a1, b2) or g.has_edge(a2, b1)):
            return False
    return True


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = math.inf if limit is None else limit
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(f"search budget of {self.limit} candidates exhausted")

    def affords(self, amount: int) -> bool:
        return self.used + amount <= self.limit


def _parts_by_size(g: BipartiteGraph) -> tuple[str, str]:
    """(smaller part, larger part), ties resolved to A first."""
    return (PART_A, PART_B) if g.n_a <= g.n_b else (PART_B, PART_A)


def _side_rows(g: BipartiteGraph, side: str):
    return g._adj_a if side == PART_A else g._adj_b


def _interval_sort(g: BipartiteGraph, enum_side: str, pi: tuple[int, ...]) -> tuple[int, ...]:
    """Order the non-enumerated part by its neighbor intervals under `pi`.

    Sort key is (leftmost position, rightmost position, index), which makes
    the result deterministic. The sort is a heuristic: it succeeds on every
    instance whose interval structure is laddered, but is not complete.
    """
    pos = {v: p for p, v in enumerate(pi)}
    other_rows = _side_rows(g, PART_B if enum_side == PART_A else PART_A)

    def key(idx: int):
        row = other_rows[idx - 1]
        if not row:
            return (len(pi), len(pi), idx)
        ps = [pos[w] for w in row]
        return (min(ps), max(ps), idx)

    return tuple(sorted(range(1, len(other_rows) + 1), key=key))


def _make_dual(enum_side: str, pi: tuple[int, ...], rho: tuple[int, ...]) -> DualOrdering:
    if enum_side == PART_A:
        return DualOrdering(pi, rho)
    return DualOrdering(rho, pi)


def find_biconvex_ordering(
    g: BipartiteGraph, budget: int | None = DEFAULT_BUDGET
) -> DualOrdering | None:
    """Search for a biconvex dual ordering.

    Returns a verified ordering, or None when the search space was covered
    exhaustively and none exists. Raises BudgetExceeded when the budget runs
    out first, and NotConnected on disconnected input (the notion is only
    used for connected graphs here).

    Strategy: enumerate permutations of the smaller part in lexicographic
    order; for each one that makes the opposite side's neighborhoods
    consecutive, try the interval-sorted companion permutation. If the
    heuristic companion never verifies, fall back to scanning the other
    part's permutations directly — the two one-sided conditions are
    independent, so any passing pair of one-sided witnesses combines into a
    biconvex ordering.
    """
    if not is_connected(g):
        raise NotConnected("biconvex ordering search requires a connected graph")
    tracker = _Budget(budget)
    enum_side, other_side = _parts_by_size(g)
    enum_n = g.n_a if enum_side == PART_A else g.n_b
    other_rows = _side_rows(g, other_side)
    enum_rows = _side_rows(g, enum_side)

    first_passing: tuple[int, ...] | None = None
    for pi in permutations(range(1, enum_n + 1)):
        tracker.spend()
        pos = {v: p for p, v in enumerate(pi)}
        if not all(_neighborhood_consecutive([pos[w] for w in row]) for row in other_rows):
            continue
        if first_passing is None:
            first_passing = pi
        rho = _interval_sort(g, enum_side, pi)
        rho_pos = {v: p for p, v in enumerate(rho)}
        if all(_neighborhood_consecutive([rho_pos[w] for w in row]) for row in enum_rows):
            d = _make_dual(enum_side, pi, rho)
            if not is_biconvex(g, d):  # pragma: no cover - double check
                raise AssertionError("one-sided checks disagree with is_biconvex")
            return d

    if first_passing is None:
        # No ordering of the enumerated part works at all: proven non-biconvex.
        return None

    # The enumerated side is orderable; scan the other side for its own witness.
    other_n = g.n_b if enum_side == PART_A else g.n_a
    for rho in permutations(range(1, other_n + 1)):
        tracker.spend()
        rho_pos = {v: p for p, v in enumerate(rho)}
        if all(_neighborhood_consecutive([rho_pos[w] for w in row]) for row in enum_rows):
            d = _make_dual(enum_side, first_passing, rho)
            if not is_biconvex(g, d):  # pragma: no cover - double check
                raise AssertionError("one-sided checks disagree with is_biconvex")
            return d
    return None


def find_biconvex_s_ordering(
    g: BipartiteGraph, budget: int | None = DEFAULT_BUDGET
) -> DualOrdering | None:
    """Search for a dual ordering that is both biconvex and straight.

    Connected biconvex graphs always have one, so None certifies that the
    input is not connected-biconvex (the full pair space of one-sided
    witnesses was covered). Raises BudgetExceeded when the cap is hit first
    and NotConnected on disconnected input.
    """
    if not is_connected(g):
        raise NotConnected("straight ordering search requires a connected graph")
    tracker = _Budget(budget)
    enum_side, other_side = _parts_by_size(g)
    enum_n = g.n_a if enum_side == PART_A else g.n_b
    other_n = g.n_b if enum_side == PART_A else g.n_a
    other_rows = _side_rows(g, other_side)
    enum_rows = _side_rows(g, enum_side)

    passing_pi: list[tuple[int, ...]] = []
    for pi in permutations(range(1, enum_n + 1)):
        tracker.spend()
        pos = {v: p for p, v in enumerate(pi)}
        if not all(_neighborhood_consecutive([pos[w] for w in row]) for row in other_rows):
            continue
        passing_pi.append(pi)
        rho = _interval_sort(g, enum_side, pi)
        rho_pos = {v: p for p, v in enumerate(rho)}
        if all(_neighborhood_consecutive([rho_pos[w] for w in row]) for row in enum_rows):
            for candidate in (rho, rho[::-1]):
                d = _make_dual(enum_side, pi, candidate)
                if is_biconvex(g, d) and is_s_ordering(g, d):
                    return d

    if not passing_pi:
        return None

    passing_rho = []
    for rho in permutations(range(1, other_n + 1)):
        tracker.spend()
        rho_pos = {v: p for p, v in enumerate(rho)}
        if all(_neighborhood_consecutive([rho_pos[w] for w in row]) for row in enum_rows):
            passing_rho.append(rho)
    if not passing_rho:
        return None

    # Straightness couples the two permutations, so the exhaustive phase must
    # try pairs; only pairs of one-sided witnesses can qualify.
    if not tracker.affords(len(passing_pi) * len(passing_rho)):
        raise BudgetExceeded(
            f"{len(passing_pi)}x{len(passing_rho)} candidate pairs exceed the budget"
        )
    for pi in passing_pi:
        for rho in passing_rho:
            tracker.spend()
            d = _make_dual(enum_side, pi, rho)
            if is_biconvex(g, d) and is_s_ordering(g, d):
                return d
    return None

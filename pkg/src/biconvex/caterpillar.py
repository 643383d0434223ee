"""Spanning caterpillar construction for connected biconvex bipartite graphs.

Given a verified biconvex straight ordering, the builder emits a spanning
caterpillar: a spine path plus a leg attachment for every off-spine vertex.
The construction is case-driven:

  small_n      -- at most six vertices: any spanning tree works
  star         -- one part is a single vertex
  common_both  -- both extreme pairs share a neighbor: two-vertex hub spine
  common_one   -- exactly one extreme pair shares a neighbor: five-vertex spine
  spath_*      -- neither does: a straight shortest path between the extreme
                  B-vertices becomes the spine, extended by the extreme
                  neighbors of its endpoints; A-vertices ordered outside the
                  extension are absorbed either directly or by swapping one
                  spine vertex per side for an off-spine neighbor

Every step the correctness argument relies on is executed as a checked
assertion; a failure raises InternalProofViolation instead of producing a
bad tree, and the finished caterpillar is re-verified from scratch.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import (
    InternalProofViolation,
    IsolatedVertex,
    NotATree,
    NotConnected,
    ObservationViolated,
    ReplacementBreaksPath,
)
from .graph import (
    PART_A,
    PART_B,
    BipartiteGraph,
    VertexId,
    is_connected,
    transpose,
    transpose_vertex,
)
from .orderings import DualOrdering
from .spath import _require_straight_ordering, shortest_s_path


@dataclass
class Caterpillar:
    """A spine path plus a spine attachment for every other vertex."""

    spine: tuple[VertexId, ...]
    legs: dict[VertexId, VertexId]

    def tree_edges(self) -> list[tuple[VertexId, VertexId]]:
        edges = list(zip(self.spine, self.spine[1:]))
        edges.extend(self.legs.items())
        return edges


@dataclass
class CaseTrace:
    """Which construction branch fired, with the vertices it pivoted on."""

    case_label: str
    witnesses: dict[str, object] = field(default_factory=dict)


def extreme_neighbors(
    g: BipartiteGraph, d: DualOrdering, v: VertexId
) -> tuple[VertexId, VertexId]:
    """The earliest and latest neighbor of v under the opposite part's order."""
    d.check_sizes(g)
    neighbors = g.neighbors(v)
    if not neighbors:
        raise IsolatedVertex(f"{v} has no neighbors")
    ranked = sorted(neighbors, key=d.pos)
    return ranked[0], ranked[-1]


def interval_attachment(
    g: BipartiteGraph,
    d: DualOrdering,
    x: VertexId,
    y: VertexId,
    z: VertexId,
    w: VertexId | None = None,
) -> bool:
    """Checked consecutiveness consequence: z sees everything between x and y.

    z must be a common neighbor of x and y. With `w` given, w must lie
    strictly between x and y in their part's order and the edge (z, w) is
    asserted; with w omitted, the edge is asserted for every vertex strictly
    between (vacuously true when there is none). A missing edge raises
    ObservationViolated, which means the ordering is not actually biconvex.
    """
    d.check_sizes(g)
    if x.part != y.part:
        raise ValueError("x and y must belong to the same part")
    if not (g.adjacent(z, x) and g.adjacent(z, y)):
        raise ValueError(f"{z} is not a common neighbor of {x} and {y}")
    lo, hi = sorted((d.pos(x), d.pos(y)))
    if w is not None:
        targets = [w]
    else:
        order = d.order_a if x.part == PART_A else d.order_b
        targets = [VertexId(x.part, idx) for idx in order[lo + 1 : hi]]
    for t in targets:
        if t.part != x.part or not (lo < d.pos(t) < hi):
            raise ValueError(f"{t} does not lie strictly between {x} and {y}")
        if not g.adjacent(z, t):
            raise ObservationViolated(
                f"{z} is a common neighbor of {x} and {y} but misses {t} in between; "
                "the ordering is not biconvex"
            )
    return True


def vertex_replacement(
    g: BipartiteGraph,
    path: Sequence[VertexId],
    old: VertexId,
    new: VertexId,
) -> tuple[VertexId, ...]:
    """Replace `old` with `new` at the same position of `path`.

    `new` must be adjacent to every path neighbor of `old`, which keeps the
    result a path; otherwise ReplacementBreaksPath is raised.
    """
    seq = list(path)
    if old not in seq:
        raise ValueError(f"{old} is not on the path")
    if new in seq:
        raise ValueError(f"{new} is already on the path")
    g.check_vertex(new)
    at = seq.index(old)
    for neighbor_at in (at - 1, at + 1):
        if 0 <= neighbor_at < len(seq) and not g.adjacent(new, seq[neighbor_at]):
            raise ReplacementBreaksPath(
                f"replacing {old} with {new} loses the edge to {seq[neighbor_at]}"
            )
    seq[at] = new
    return tuple(seq)


def is_caterpillar(
    edges: Iterable[tuple[Hashable, Hashable]],
    vertices: Iterable[Hashable] | None = None,
) -> bool:
    """True iff the tree collapses to a path when all leaves are removed.

    The input must be a tree (connected, |E| = |V| - 1), otherwise NotATree
    is raised. Empty and single-vertex remainders count as paths.
    """
    edge_list = [tuple(e) for e in edges]
    verts: set[Hashable] = set(vertices) if vertices is not None else set()
    for u, v in edge_list:
        verts.add(u)
        verts.add(v)
    if not verts:
        raise NotATree("no vertices")
    if len(edge_list) != len(verts) - 1:
        raise NotATree(f"{len(edge_list)} edges on {len(verts)} vertices")
    adj: dict[Hashable, list[Hashable]] = {v: [] for v in verts}
    for u, v in edge_list:
        if u == v or u not in adj or v not in adj:
            raise NotATree(f"bad edge ({u}, {v})")
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(verts))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != len(verts):
        raise NotATree("not connected")
    rest = {v for v in verts if len(adj[v]) > 1}
    # Non-leaves of a tree induce a subtree; it is a path iff no vertex keeps
    # three neighbors inside it.
    return all(sum(1 for w in adj[v] if w in rest) <= 2 for v in rest)


def caterpillar_violation(g: BipartiteGraph, c: Caterpillar) -> str | None:
    """First violated caterpillar invariant, or None when all hold."""
    if not c.spine:
        return "empty spine"
    try:
        for v in c.spine:
            g.check_vertex(v)
        for leg, anchor in c.legs.items():
            g.check_vertex(leg)
            g.check_vertex(anchor)
    except Exception as exc:
        return str(exc)
    if len(set(c.spine)) != len(c.spine):
        return "spine repeats a vertex"
    for u, v in zip(c.spine, c.spine[1:]):
        if not g.adjacent(u, v):
            return f"spine break: {u} and {v} are not adjacent"
    spine_set = set(c.spine)
    for leg, anchor in c.legs.items():
        if leg in spine_set:
            return f"leg {leg} is also on the spine"
        if anchor not in spine_set:
            return f"leg {leg} attaches to off-spine vertex {anchor}"
        if not g.adjacent(leg, anchor):
            return f"missing attachment edge ({leg}, {anchor})"
    covered = spine_set | set(c.legs)
    everything = set(g.vertices())
    if covered != everything:
        missing = sorted(everything - covered)
        return f"not spanning: {', '.join(map(str, missing))} uncovered"
    tree = c.tree_edges()
    if len(tree) != g.n - 1:
        return f"{len(tree)} tree edges, expected {g.n - 1}"
    try:
        if not is_caterpillar(tree, everything):
            return "leaf removal does not leave a path"
    except NotATree as exc:
        return f"not a tree: {exc}"
    return None


def verify_spanning_caterpillar(g: BipartiteGraph, c: Caterpillar) -> bool:
    """Check every caterpillar invariant against g."""
    return caterpillar_violation(g, c) is None


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise InternalProofViolation(message)


def _checked_attachment(g, d, x, y, z, w) -> None:
    try:
        interval_attachment(g, d, x, y, z, w)
    except (ObservationViolated, ValueError) as exc:
        raise InternalProofViolation(str(exc)) from exc


def _bfs_tree(g: BipartiteGraph) -> list[tuple[VertexId, VertexId]]:
    root = VertexId.a(1) if g.n_a else VertexId.b(1)
    seen = {root}
    queue = deque([root])
    edges = []
    while queue:
        u = queue.popleft()
        for w in sorted(g.neighbors(u)):
            if w not in seen:
                seen.add(w)
                edges.append((u, w))
                queue.append(w)
    return edges


def _tree_to_caterpillar(
    vertices: Iterable[VertexId], edges: list[tuple[VertexId, VertexId]]
) -> Caterpillar | None:
    """Decompose a tree into spine and legs; None when it is no caterpillar."""
    verts = sorted(vertices)
    adj: dict[VertexId, list[VertexId]] = {v: [] for v in verts}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if len(verts) == 1:
        return Caterpillar((verts[0],), {})
    if len(verts) == 2:
        return Caterpillar(tuple(verts), {})
    rest = {v for v in verts if len(adj[v]) > 1}
    rest_deg = {v: sum(1 for w in adj[v] if w in rest) for v in rest}
    if any(deg > 2 for deg in rest_deg.values()):
        return None
    if len(rest) == 1:
        spine = [next(iter(rest))]
    else:
        ends = sorted(v for v, deg in rest_deg.items() if deg <= 1)
        spine = [ends[0]]
        while True:
            nxt = [w for w in adj[spine[-1]] if w in rest and (len(spine) < 2 or w != spine[-2])]
            if not nxt:
                break
            spine.append(nxt[0])
        if len(spine) != len(rest):
            return None
    spine_set = set(spine)
    legs = {}
    for v in verts:
        if v not in spine_set:
            (anchor,) = adj[v]
            legs[v] = anchor
    return Caterpillar(tuple(spine), legs)


def build_spanning_caterpillar(
    g: BipartiteGraph, d: DualOrdering
) -> tuple[Caterpillar, CaseTrace]:
    """Construct a spanning caterpillar of g from a biconvex straight ordering.

    The output always passes verify_spanning_caterpillar; the trace records
    the construction branch and its pivot vertices.
    """
    if not is_connected(g):
        raise NotConnected("spanning caterpillars exist only for connected graphs")
    _require_straight_ordering(g, d)
    cat, trace = _build(g, d)
    violation = caterpillar_violation(g, cat)
    _check(violation is None, f"construction failed verification: {violation}")
    return cat, trace


def _build(g: BipartiteGraph, d: DualOrdering) -> tuple[Caterpillar, CaseTrace]:
    if g.n <= 6:
        tree = _bfs_tree(g)
        cat = _tree_to_caterpillar(g.vertices(), tree)
        _check(cat is not None, "a spanning tree on <= 6 vertices must be a caterpillar")
        return cat, CaseTrace("small_n")

    if g.n_a == 1 or g.n_b == 1:
        center = VertexId.a(1) if g.n_a == 1 else VertexId.b(1)
        legs = {}
        for v in g.vertices():
            if v != center:
                _check(g.adjacent(v, center), f"star center misses {v}")
                legs[v] = center
        return Caterpillar((center,), legs), CaseTrace("star", {"center": center})

    a_lo, a_hi = d.first(PART_A), d.last(PART_A)
    b_lo, b_hi = d.first(PART_B), d.last(PART_B)
    hub_b_options = sorted(
        set(g.neighbors(a_lo)) & set(g.neighbors(a_hi)), key=d.pos
    )
    hub_a_options = sorted(
        set(g.neighbors(b_lo)) & set(g.neighbors(b_hi)), key=d.pos
    )

    if hub_b_options and hub_a_options:
        return _build_common_both(g, d, hub_a_options[0], hub_b_options[0])
    if hub_b_options:
        return _build_common_one(g, d, hub_b_options[0])
    if hub_a_options:
        cat_t, trace_t = _build_common_one(
            transpose(g), d.transposed(), transpose_vertex(hub_a_options[0])
        )
        spine = tuple(transpose_vertex(v) for v in cat_t.spine)
        legs = {
            transpose_vertex(leg): transpose_vertex(anchor)
            for leg, anchor in cat_t.legs.items()
        }
        witnesses = {
            key: transpose_vertex(val) if isinstance(val, VertexId) else val
            for key, val in trace_t.witnesses.items()
        }
        return Caterpillar(spine, legs), CaseTrace(trace_t.case_label + "_swapped", witnesses)
    return _build_straight_path_case(g, d)


def _build_common_both(
    g: BipartiteGraph, d: DualOrdering, hub_a: VertexId, hub_b: VertexId
) -> tuple[Caterpillar, CaseTrace]:
    for v in g.vertices():
        if v.part == PART_A:
            _check(g.adjacent(v, hub_b), f"hub {hub_b} misses {v}")
        else:
            _check(g.adjacent(v, hub_a), f"hub {hub_a} misses {v}")
    legs = {}
    for v in g.vertices():
        if v == hub_a or v == hub_b:
            continue
        legs[v] = hub_b if v.part == PART_A else hub_a
    trace = CaseTrace("common_both", {"hub_a": hub_a, "hub_b": hub_b})
    return Caterpillar((hub_a, hub_b), legs), trace


def _build_common_one(
    g: BipartiteGraph, d: DualOrdering, hub_b: VertexId
) -> tuple[Caterpillar, CaseTrace]:
    b_lo, b_hi = d.first(PART_B), d.last(PART_B)
    for i in range(1, g.n_a + 1):
        _check(g.adjacent(VertexId.a(i), hub_b), f"hub {hub_b} misses a{i}")
    anchor_lo, _ = extreme_neighbors(g, d, b_lo)
    _, anchor_hi = extreme_neighbors(g, d, b_hi)
    _check(
        len({b_lo, hub_b, b_hi}) == 3,
        "the hub must differ from both extreme B-vertices",
    )
    _check(anchor_lo != anchor_hi, "the two anchors must differ")
    spine = (b_lo, anchor_lo, hub_b, anchor_hi, b_hi)
    for u, v in zip(spine, spine[1:]):
        _check(g.adjacent(u, v), f"spine edge ({u}, {v}) missing")
    legs = {}
    spine_set = set(spine)
    for v in g.vertices():
        if v in spine_set:
            continue
        if v.part == PART_A:
            legs[v] = hub_b
        elif d.pos(v) < d.pos(hub_b):
            _checked_attachment(g, d, b_lo, hub_b, anchor_lo, v)
            legs[v] = anchor_lo
        else:
            _checked_attachment(g, d, hub_b, b_hi, anchor_hi, v)
            legs[v] = anchor_hi
    trace = CaseTrace(
        "common_one",
        {"hub_b": hub_b, "anchor_lo": anchor_lo, "anchor_hi": anchor_hi},
    )
    return Caterpillar(spine, legs), trace


def _spine_b_gaps(d: DualOrdering, spine: Sequence[VertexId]):
    """Consecutive B-vertices of the spine with the A-vertex between them."""
    gaps = []
    for t in range(len(spine)):
        if spine[t].part == PART_B and t + 2 < len(spine) and spine[t + 2].part == PART_B:
            gaps.append((spine[t], spine[t + 1], spine[t + 2]))
    return gaps


def _build_straight_path_case(
    g: BipartiteGraph, d: DualOrdering
) -> tuple[Caterpillar, CaseTrace]:
    b_lo, b_hi = d.first(PART_B), d.last(PART_B)
    q = shortest_s_path(g, d, b_lo, b_hi).vertices
    q_a = [v for v in q if v.part == PART_A]
    q_b = [v for v in q if v.part == PART_B]
    _check(len(q_a) >= 2, "the extreme B-vertices cannot share a neighbor here")
    for seq in (q_a, q_b):
        _check(
            all(d.pos(x) < d.pos(y) for x, y in zip(seq, seq[1:])),
            "the straight spine path must be increasing",
        )

    anchor_lo, _ = extreme_neighbors(g, d, b_lo)
    _, anchor_hi = extreme_neighbors(g, d, b_hi)
    spine = list(q)
    if d.pos(anchor_lo) < d.pos(q_a[0]):
        spine.insert(0, anchor_lo)
    else:
        _check(anchor_lo == q_a[0], "path start must use the earliest neighbor")
    if d.pos(anchor_hi) > d.pos(q_a[-1]):
        spine.append(anchor_hi)
    else:
        _check(anchor_hi == q_a[-1], "path end must use the latest neighbor")
    spine = tuple(spine)

    overhang_lo = [
        VertexId.a(i) for i in d.order_a if d.pos(VertexId.a(i)) < d.pos(anchor_lo)
    ]
    overhang_hi = [
        VertexId.a(i) for i in d.order_a if d.pos(VertexId.a(i)) > d.pos(anchor_hi)
    ]

    # B-attachment witnesses come from the pre-replacement path: the A-vertex
    # bridging each consecutive B-pair keeps its edges no matter which spine
    # B-vertices are later swapped out.
    original_gaps = _spine_b_gaps(d, spine)

    legs: dict[VertexId, VertexId] = {}
    replaced: dict[str, tuple[VertexId, VertexId] | None] = {"lo": None, "hi": None}
    extremes = {"lo": d.first(PART_A), "hi": d.last(PART_A)}
    overhangs = {"lo": overhang_lo, "hi": overhang_hi}

    changed = True
    while changed:
        changed = False
        for side in ("lo", "hi"):
            if not overhangs[side] or replaced[side] is not None:
                continue
            extreme = extremes[side]
            spine_b = [v for v in spine if v.part == PART_B]
            if any(g.adjacent(extreme, bb) for bb in spine_b):
                continue
            first_nb, last_nb = extreme_neighbors(g, d, extreme)
            incoming = first_nb if side == "lo" else last_nb
            gap_at = next(
                (
                    t
                    for t in range(len(spine_b) - 1)
                    if d.pos(spine_b[t]) < d.pos(incoming) < d.pos(spine_b[t + 1])
                ),
                None,
            )
            _check(gap_at is not None, f"{incoming} must fall between spine vertices")
            left_b, right_b = spine_b[gap_at], spine_b[gap_at + 1]
            bridge = spine[spine.index(left_b) + 1]
            _checked_attachment(g, d, left_b, right_b, bridge, incoming)
            victim = left_b if side == "lo" else right_b
            at = spine.index(victim)
            former = [spine[t] for t in (at - 1, at + 1) if 0 <= t < len(spine)]
            try:
                spine = vertex_replacement(g, spine, victim, incoming)
            except ReplacementBreaksPath as exc:
                raise InternalProofViolation(str(exc)) from exc
            legs[victim] = min(former, key=d.pos)
            replaced[side] = (victim, incoming)
            now_b = [v for v in spine if v.part == PART_B]
            _check(
                all(d.pos(x) < d.pos(y) for x, y in zip(now_b, now_b[1:])),
                "replacement broke the spine's B-order",
            )
            changed = True

    if replaced["lo"] and replaced["hi"]:
        y_lo, y_hi = replaced["lo"][1], replaced["hi"][1]
        _check(
            d.pos(y_lo) < d.pos(y_hi),
            "the two replacement vertices must arrive in order",
        )
        # Re-check the dichotomy behind that claim: a disordered pair would
        # force one of these edges and hence a shared extreme neighbor.
        _check(
            not g.adjacent(extremes["hi"], y_lo) and not g.adjacent(extremes["lo"], y_hi),
            "a replacement vertex is a common neighbor of the extreme A-vertices",
        )

    spine_set = set(spine)
    for side in ("lo", "hi"):
        if not overhangs[side]:
            continue
        if replaced[side] is not None:
            target = replaced[side][1]
        else:
            extreme = extremes[side]
            options = sorted(
                (bb for bb in spine if bb.part == PART_B and g.adjacent(extreme, bb)),
                key=d.pos,
            )
            _check(bool(options), f"{extreme} lost every spine attachment")
            target = options[0]
        for v in overhangs[side]:
            _check(g.adjacent(v, target), f"overhang vertex {v} misses {target}")
            legs[v] = target

    for j in range(1, g.n_b + 1):
        v = VertexId.b(j)
        if v in spine_set or v in legs:
            continue
        gap = next(
            (
                (left_b, bridge, right_b)
                for left_b, bridge, right_b in original_gaps
                if d.pos(left_b) < d.pos(v) < d.pos(right_b)
            ),
            None,
        )
        _check(gap is not None, f"{v} is not bracketed by the spine path")
        left_b, bridge, right_b = gap
        _checked_attachment(g, d, left_b, right_b, bridge, v)
        legs[v] = bridge

    a_pairs = [
        (spine[t], spine[t + 1], spine[t + 2])
        for t in range(len(spine) - 2)
        if spine[t].part == PART_A and spine[t + 2].part == PART_A
    ]
    for i in range(1, g.n_a + 1):
        v = VertexId.a(i)
        if v in spine_set or v in legs:
            continue
        _check(
            d.pos(anchor_lo) < d.pos(v) < d.pos(anchor_hi),
            f"{v} escaped both the overhangs and the anchored range",
        )
        pair = next(
            (
                (left_a, bridge, right_a)
                for left_a, bridge, right_a in a_pairs
                if d.pos(left_a) < d.pos(v) < d.pos(right_a)
            ),
            None,
        )
        _check(pair is not None, f"{v} is not bracketed by spine A-vertices")
        left_a, bridge, right_a = pair
        _checked_attachment(g, d, left_a, right_a, bridge, v)
        legs[v] = bridge

    if replaced["lo"] and replaced["hi"]:
        label = "spath_replace_both"
    elif replaced["lo"]:
        label = "spath_replace_left"
    elif replaced["hi"]:
        label = "spath_replace_right"
    else:
        label = "spath_plain"
    witnesses: dict[str, object] = {
        "anchor_lo": anchor_lo,
        "anchor_hi": anchor_hi,
        "overhang_lo": tuple(overhang_lo),
        "overhang_hi": tuple(overhang_hi),
    }
    if replaced["lo"]:
        witnesses["replaced_lo"] = replaced["lo"]
    if replaced["hi"]:
        witnesses["replaced_hi"] = replaced["hi"]
    return Caterpillar(spine, legs), CaseTrace(label, witnesses)

"""Canonical graph file formats.

JSON: {"n_a": int, "n_b": int, "edges": [[a, b], ...]} with optional
"order_a"/"order_b" (both or neither). Edge list: a header line
``p bip <n_a> <n_b> <m>`` followed by exactly m lines ``e <a> <b>``.
Both readers are strict: unknown keys, stray tokens, and count mismatches
are rejected, and both writers emit one canonical byte sequence per graph.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import FormatError
from .graph import BipartiteGraph
from .orderings import DualOrdering

_JSON_KEYS = {"n_a", "n_b", "edges", "order_a", "order_b"}


def graph_to_json_dict(g: BipartiteGraph, d: DualOrdering | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "n_a": g.n_a,
        "n_b": g.n_b,
        "edges": [[a, b] for a, b in g.edges],
    }
    if d is not None:
        doc["order_a"] = list(d.order_a)
        doc["order_b"] = list(d.order_b)
    return doc


def dumps_graph(g: BipartiteGraph, d: DualOrdering | None = None) -> str:
    return json.dumps(graph_to_json_dict(g, d), indent=2) + "\n"


def _expect_int(doc: dict, key: str) -> int:
    value = doc[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise FormatError(f"{key} must be an integer, got {value!r}")
    return value


def graph_from_json_dict(doc: Any) -> tuple[BipartiteGraph, DualOrdering | None]:
    if not isinstance(doc, dict):
        raise FormatError("top-level JSON value must be an object")
    unknown = set(doc) - _JSON_KEYS
    if unknown:
        raise FormatError(f"unknown keys: {', '.join(sorted(unknown))}")
    for key in ("n_a", "n_b", "edges"):
        if key not in doc:
            raise FormatError(f"missing key: {key}")
    n_a = _expect_int(doc, "n_a")
    n_b = _expect_int(doc, "n_b")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise FormatError("edges must be a list")
    pairs = []
    for item in edges:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise FormatError(f"edge entries must be [a, b] integer pairs, got {item!r}")
        pairs.append((item[0], item[1]))
    try:
        g = BipartiteGraph(n_a, n_b, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc

    has_a, has_b = "order_a" in doc, "order_b" in doc
    if has_a != has_b:
        raise FormatError("order_a and order_b must be given together")
    d = None
    if has_a:
        for key in ("order_a", "order_b"):
            if not isinstance(doc[key], list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in doc[key]
            ):
                raise FormatError(f"{key} must be a list of integers")
        d = DualOrdering(tuple(doc["order_a"]), tuple(doc["order_b"]))
        d.check_sizes(g)
    return g, d


def loads_graph(text: str) -> tuple[BipartiteGraph, DualOrdering | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return graph_from_json_dict(doc)


def format_edgelist(g: BipartiteGraph) -> str:
    lines = [f"p bip {g.n_a} {g.n_b} {g.m}"]
    lines.extend(f"e {a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> BipartiteGraph:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty edge-list document")
    header = lines[0].split()
    if len(header) != 5 or header[0] != "p" or header[1] != "bip":
        raise FormatError(f"bad header: {lines[0]!r}")
    try:
        n_a, n_b, m = (int(x) for x in header[2:])
    except ValueError as exc:
        raise FormatError(f"bad header counts: {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(lines) - 1}")
    pairs = []
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3 or tokens[0] != "e":
            raise FormatError(f"bad edge line: {line!r}")
        try:
            pairs.append((int(tokens[1]), int(tokens[2])))
        except ValueError as exc:
            raise FormatError(f"bad edge line: {line!r}") from exc
    try:
        return BipartiteGraph(n_a, n_b, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc

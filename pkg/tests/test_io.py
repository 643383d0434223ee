import pytest

from biconvex import (
    BipartiteGraph,
    DuplicateEdge,
    FormatError,
    dumps_graph,
    format_edgelist,
    loads_graph,
    parse_edgelist,
)
from biconvex.orderings import DualOrdering


def test_json_roundtrip(staircase7):
    d = DualOrdering((2, 1, 3), (1, 3, 2, 4))
    g2, d2 = loads_graph(dumps_graph(staircase7, d))
    assert g2 == staircase7
    assert d2.order_a == d.order_a and d2.order_b == d.order_b


def test_json_roundtrip_without_ordering(fig1):
    g2, d2 = loads_graph(dumps_graph(fig1))
    assert g2 == fig1 and d2 is None


def test_unknown_keys_rejected():
    with pytest.raises(FormatError, match="unknown"):
        loads_graph('{"n_a": 1, "n_b": 1, "edges": [[1, 1]], "weight": 2}')


def test_missing_keys_rejected():
    with pytest.raises(FormatError):
        loads_graph('{"n_a": 1, "edges": []}')


def test_orderings_must_come_together():
    with pytest.raises(FormatError):
        loads_graph('{"n_a": 1, "n_b": 1, "edges": [[1, 1]], "order_a": [1]}')


def test_bad_edge_shape_rejected():
    with pytest.raises(FormatError):
        loads_graph('{"n_a": 1, "n_b": 1, "edges": [[1, 1, 1]]}')
    with pytest.raises(FormatError):
        loads_graph('{"n_a": 1, "n_b": 1, "edges": [[1, true]]}')


def test_duplicate_edges_propagate():
    with pytest.raises(DuplicateEdge):
        loads_graph('{"n_a": 1, "n_b": 1, "edges": [[1, 1], [1, 1]]}')


def test_edgelist_roundtrip(fig1):
    assert parse_edgelist(format_edgelist(fig1)) == fig1


def test_edgelist_header():
    text = format_edgelist(BipartiteGraph(1, 1, [(1, 1)]))
    assert text.splitlines()[0] == "p bip 1 1 1"


def test_edgelist_rejects_count_mismatch():
    with pytest.raises(FormatError):
        parse_edgelist("p bip 1 1 2\ne 1 1\n")


def test_edgelist_rejects_junk():
    with pytest.raises(FormatError):
        parse_edgelist("p bip 1 1 1\nedge 1 1\n")
    with pytest.raises(FormatError):
        parse_edgelist("q bip 1 1 0\n")


def test_serialization_is_canonical(staircase7):
    assert dumps_graph(staircase7) == dumps_graph(staircase7)

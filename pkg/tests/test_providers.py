import io

import networkx as nx
import pytest
from hypothesis import given, settings

from graphdim.core.graph import complete, edgeless, from_edges
from graphdim.core.types import GraphFormat
from graphdim.errors import GraphFormatError
from graphdim.generators.families import petersen, star_clique
from graphdim.providers.document import detect_format, load_document, parse_text, write_document
from graphdim.providers.dot import serialize_dot
from graphdim.providers.edge_list import parse_edge_list, serialize_edge_list
from graphdim.providers.graph6 import (
    from_networkx,
    parse_graph6,
    parse_graph6_lines,
    serialize_graph6,
    to_networkx,
)

from .strategies import graphs


# =========================
# EDGE LIST
# =========================
def test_header_keeps_isolated_vertices():
    assert parse_edge_list("n 2\n") == edgeless(2)


def test_triangle():
    assert parse_edge_list("0 1\n1 2\n0 2\n") == complete(3)


def test_comments_and_blank_lines_are_ignored():
    text = "# a triangle\n\n0 1  # first\n1 2\n\n0 2\n"
    assert parse_edge_list(text) == complete(3)


def test_order_defaults_to_max_id_plus_one():
    assert parse_edge_list("0 4\n").n == 5
    assert parse_edge_list("").n == 0


@pytest.mark.parametrize(
    "text, line",
    [
        ("0 0\n", 1),
        ("0 1\n1 x\n", 2),
        ("0 1 2\n", 1),
        ("n 3\n0 3\n", 2),
        ("0 1\nn 3\n", 2),
        ("# header\n\n-1 2\n", 3),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphFormatError) as excinfo:
        parse_edge_list(text)

    assert excinfo.value.line == line
    assert str(excinfo.value).startswith(f"line {line}:")


def test_serialize_edge_list():
    assert serialize_edge_list(from_edges(3, [(1, 0)])) == "n 3\n0 1\n"


# =========================
# GRAPH6
# =========================
@pytest.mark.parametrize(
    "record, expected",
    [
        ("A_", complete(2)),
        ("Bw", complete(3)),
        ("?", edgeless(0)),
        ("@", edgeless(1)),
    ],
)
def test_known_graph6_records(record, expected):
    assert parse_graph6(record) == expected
    assert serialize_graph6(expected) == record


def test_graph6_header_is_accepted():
    assert parse_graph6(">>graph6<<Bw\n") == complete(3)


def test_networkx_encoded_petersen():
    record = nx.to_graph6_bytes(nx.petersen_graph(), header=False).decode("ascii")
    assert parse_graph6(record) == petersen()


@pytest.mark.parametrize("record", ["", "B w", "Bw~~~", "A"])
def test_invalid_graph6(record):
    with pytest.raises(GraphFormatError):
        parse_graph6(record)


def test_graph6_lines_report_line_numbers():
    graphs_read = parse_graph6_lines("A_\n\nBw\n")
    assert graphs_read == [complete(2), complete(3)]

    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph6_lines("A_\nB\x7f\n")
    assert excinfo.value.line == 2


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=12))
def test_graph6_matches_networkx(graph):
    record = serialize_graph6(graph)

    assert parse_graph6(record) == graph
    decoded = nx.from_graph6_bytes(record.encode("ascii"))
    assert sorted(decoded.edges()) == graph.edges()


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=12))
def test_edge_list_round_trip(graph):
    assert parse_edge_list(serialize_edge_list(graph)) == graph


def test_networkx_conversion_relabels_to_dense_ids():
    nx_graph = nx.Graph([(10, 20), (20, 30)])
    assert from_networkx(nx_graph) == from_edges(3, [(0, 1), (1, 2)])
    assert sorted(to_networkx(star_clique(2, 3)).edges()) == [(0, 1), (0, 2)]


# =========================
# DOT AND DOCUMENTS
# =========================
def test_serialize_dot():
    assert serialize_dot(complete(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"


def test_detect_format():
    assert detect_format("corpus.g6") == GraphFormat.GRAPH6
    assert detect_format("x.graph6") == GraphFormat.GRAPH6
    assert detect_format("x.dot") == GraphFormat.DOT
    assert detect_format("x.edges") == GraphFormat.EDGE_LIST


def test_dot_is_export_only():
    with pytest.raises(GraphFormatError):
        parse_text("graph G {}", GraphFormat.DOT)


def test_load_document_from_file(tmp_path):
    path = tmp_path / "triangle.g6"
    path.write_text("Bw\n", encoding="utf-8")
    document = load_document(str(path))

    assert document.format == GraphFormat.GRAPH6
    assert document.graph == complete(3)
    assert document.label == "triangle"


def test_load_document_from_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("0 1\n"))
    document = load_document("-")

    assert document.graph == complete(2)
    assert document.label is None


def test_write_document_round_trip(tmp_path, star_k4_n12):
    for fmt in (GraphFormat.EDGE_LIST, GraphFormat.GRAPH6):
        path = write_document(star_k4_n12, tmp_path / "out" / f"g.{fmt.value}", fmt)
        assert load_document(str(path), fmt).graph == star_k4_n12

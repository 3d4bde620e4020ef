from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

from graphdim.core.graph import Graph
from graphdim.core.types import GraphFormat
from graphdim.errors import GraphFormatError
from graphdim.providers.dot import serialize_dot
from graphdim.providers.edge_list import parse_edge_list, serialize_edge_list
from graphdim.providers.graph6 import parse_graph6, serialize_graph6

STDIN_SOURCE = "-"
SUFFIX_FORMATS = {
    ".g6": GraphFormat.GRAPH6,
    ".graph6": GraphFormat.GRAPH6,
    ".dot": GraphFormat.DOT,
}


@dataclass(frozen=True)
class GraphDocument:
    source: str
    format: GraphFormat
    graph: Graph
    label: str | None = None


def detect_format(source: str) -> GraphFormat:
    return SUFFIX_FORMATS.get(Path(source).suffix.lower(), GraphFormat.EDGE_LIST)


def parse_text(text: str, fmt: GraphFormat) -> Graph:
    if fmt == GraphFormat.EDGE_LIST:
        return parse_edge_list(text)
    if fmt == GraphFormat.GRAPH6:
        return parse_graph6(text)
    raise GraphFormatError(f"{fmt.value} is an export-only format")


def serialize(graph: Graph, fmt: GraphFormat) -> str:
    if fmt == GraphFormat.EDGE_LIST:
        return serialize_edge_list(graph)
    if fmt == GraphFormat.GRAPH6:
        return serialize_graph6(graph) + "\n"
    return serialize_dot(graph)


def load_document(
    source: str,
    fmt: GraphFormat | None = None,
    label: str | None = None,
) -> GraphDocument:
    if source == STDIN_SOURCE:
        text = sys.stdin.read()
        fmt = fmt or GraphFormat.EDGE_LIST
    else:
        text = Path(source).read_text(encoding="utf-8")
        fmt = fmt or detect_format(source)
    return GraphDocument(
        source=source,
        format=fmt,
        graph=parse_text(text, fmt),
        label=label or (None if source == STDIN_SOURCE else Path(source).stem),
    )


def write_document(graph: Graph, target: str | Path, fmt: GraphFormat) -> Path:
    path = Path(target)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize(graph, fmt), encoding="utf-8")
    return path

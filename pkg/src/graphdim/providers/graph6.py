from __future__ import annotations

import networkx as nx

from graphdim.core.graph import Graph, from_edges
from graphdim.errors import GraphFormatError

GRAPH6_HEADER = ">>graph6<<"


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


def from_networkx(nx_graph: nx.Graph) -> Graph:
    index = {node: i for i, node in enumerate(sorted(nx_graph.nodes()))}
    return from_edges(len(index), ((index[u], index[v]) for u, v in nx_graph.edges()))


def parse_graph6(text: str, line: int | None = None) -> Graph:
    record = text.strip()
    if record.startswith(GRAPH6_HEADER):
        record = record[len(GRAPH6_HEADER):]
    if not record:
        raise GraphFormatError("empty graph6 record", line)
    if "\n" in record:
        raise GraphFormatError("one graph6 record per call; use parse_graph6_lines", line)
    for ch in record:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", line)
    try:
        decoded = nx.from_graph6_bytes(record.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise GraphFormatError(f"malformed graph6 record: {exc}", line) from exc
    return from_networkx(decoded)


def parse_graph6_lines(text: str) -> list[Graph]:
    graphs: list[Graph] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        if raw.strip():
            graphs.append(parse_graph6(raw, line=number))
    return graphs


def serialize_graph6(graph: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(graph), header=False).decode("ascii").strip()

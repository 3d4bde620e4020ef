from __future__ import annotations

from graphdim.core.graph import Graph, from_edges
from graphdim.errors import GraphFormatError

HEADER_TOKEN = "n"


def _parse_int(token: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError as exc:
        raise GraphFormatError(f"expected an integer, got {token!r}", line) from exc
    if value < 0:
        raise GraphFormatError(f"negative vertex id or count {value}", line)
    return value


def parse_edge_list(text: str) -> Graph:
    """
    Parse ``u v`` lines into a graph.

    Blank lines and ``#`` comments are ignored. An optional first data
    line ``n <count>`` fixes the order so trailing isolated vertices
    survive; otherwise the order is max id + 1.
    """
    declared: int | None = None
    seen_edge = False
    max_id = -1
    edges: list[tuple[int, int]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()

        if tokens[0] == HEADER_TOKEN:
            if seen_edge or declared is not None:
                raise GraphFormatError("header 'n <count>' must be the first data line", number)
            if len(tokens) != 2:
                raise GraphFormatError(f"malformed header {line!r}", number)
            declared = _parse_int(tokens[1], number)
            continue

        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", number)
        u, v = (_parse_int(token, number) for token in tokens)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", number)
        if declared is not None and max(u, v) >= declared:
            raise GraphFormatError(f"vertex id {max(u, v)} >= declared n={declared}", number)
        seen_edge = True
        max_id = max(max_id, u, v)
        edges.append((u, v))

    n = declared if declared is not None else max_id + 1
    return from_edges(n, edges)


def serialize_edge_list(graph: Graph) -> str:
    lines = [f"{HEADER_TOKEN} {graph.n}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"

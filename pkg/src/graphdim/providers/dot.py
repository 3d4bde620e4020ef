from __future__ import annotations

from graphdim.core.graph import Graph


def serialize_dot(graph: Graph, name: str = "G") -> str:
    """Plain undirected DOT text; no layout or styling."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(graph.n))
    lines.extend(f"  {u} -- {v};" for u, v in graph.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"

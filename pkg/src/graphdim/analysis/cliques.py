from __future__ import annotations

from math import comb
from typing import Sequence

from loguru import logger

from graphdim.core.graph import Graph, VertexSet, iter_bits, members
from graphdim.errors import GraphValidationError, ResourceLimitError

DEFAULT_CLIQUE_LIMIT = 1_000_000
BRUTE_FORCE_MAX_ORDER = 16


def maximal_cliques(graph: Graph, *, limit: int = DEFAULT_CLIQUE_LIMIT) -> list[VertexSet]:
    """
    Enumerate the inclusion-maximal cliques of ``graph``.

    Bron-Kerbosch with pivoting over bitmask neighbour sets. The pivot is
    the vertex of P | X with the most neighbours in P (smallest id on ties).
    Isolated vertices come out as order-1 cliques. The result is sorted
    lexicographically by sorted members.
    """
    if graph.n == 0:
        return []

    adj = graph.adj
    found: list[int] = []

    def expand(clique: int, candidates: int, excluded: int) -> None:
        if not candidates and not excluded:
            found.append(clique)
            if len(found) > limit:
                raise ResourceLimitError(f"Maximal clique count exceeded limit {limit}")
            return

        pivot = _choose_pivot(adj, candidates, excluded)
        for v in iter_bits(candidates & ~adj[pivot]):
            bit = 1 << v
            expand(clique | bit, candidates & adj[v], excluded & adj[v])
            candidates &= ~bit
            excluded |= bit

    expand(0, graph.vertex_mask, 0)
    logger.debug("Enumerated {} maximal cliques on n={}", len(found), graph.n)
    return _canonical([members(mask) for mask in found])


def _choose_pivot(adj: tuple[int, ...], candidates: int, excluded: int) -> int:
    best = -1
    best_overlap = -1
    for u in iter_bits(candidates | excluded):
        overlap = (candidates & adj[u]).bit_count()
        if overlap > best_overlap:
            best = u
            best_overlap = overlap
    return best


def _canonical(cliques: Sequence[VertexSet]) -> list[VertexSet]:
    return sorted(cliques, key=lambda clique: tuple(sorted(clique)))


def _require_nonempty(graph: Graph) -> None:
    if graph.n == 0:
        raise GraphValidationError("Clique statistics are undefined for the empty graph")


def clique_number(graph: Graph, cliques: Sequence[VertexSet] | None = None) -> int:
    """omega(G): order of the largest maximal clique."""
    _require_nonempty(graph)
    cliques = maximal_cliques(graph) if cliques is None else cliques
    return max(len(clique) for clique in cliques)


def min_clique_number(graph: Graph, cliques: Sequence[VertexSet] | None = None) -> int:
    """gamma(G): order of the smallest maximal clique."""
    _require_nonempty(graph)
    cliques = maximal_cliques(graph) if cliques is None else cliques
    return min(len(clique) for clique in cliques)


def is_pure(graph: Graph, cliques: Sequence[VertexSet] | None = None) -> bool:
    _require_nonempty(graph)
    cliques = maximal_cliques(graph) if cliques is None else cliques
    return clique_number(graph, cliques) == min_clique_number(graph, cliques)


def clique_edge_total(graph: Graph, cliques: Sequence[VertexSet] | None = None) -> int:
    cliques = maximal_cliques(graph) if cliques is None else cliques
    return sum(comb(len(clique), 2) for clique in cliques)


def brute_force_maximal_cliques(graph: Graph) -> list[VertexSet]:
    """Filter every vertex subset; an oracle for small graphs only."""
    if graph.n > BRUTE_FORCE_MAX_ORDER:
        raise ResourceLimitError(
            f"Brute-force clique search limited to n <= {BRUTE_FORCE_MAX_ORDER}, got {graph.n}"
        )
    adj = graph.adj
    cliques: list[VertexSet] = []
    for mask in range(1, 1 << graph.n):
        if any((adj[v] | (1 << v)) & mask != mask for v in iter_bits(mask)):
            continue
        outside = graph.vertex_mask & ~mask
        if any(adj[w] & mask == mask for w in iter_bits(outside)):
            continue
        cliques.append(members(mask))
    return _canonical(cliques)

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from graphdim.errors import GraphValidationError

# A vertex set of some host graph. Internally the same set travels as an
# int bitmask (bit v set <=> v is a member), which is also the memo key.
VertexSet = frozenset[int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """
    Immutable finite simple graph on vertices 0..n-1.

    ``adj[v]`` is the neighbour set of ``v`` packed into an int bitmask.
    Python ints are arbitrary width, so the same representation serves
    small and large graphs alike.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphValidationError(f"Vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphValidationError(
                f"Adjacency has {len(self.adj)} rows for {self.n} vertices"
            )
        full = self.vertex_mask
        for v, nbrs in enumerate(self.adj):
            if nbrs < 0 or nbrs & ~full:
                raise GraphValidationError(f"Vertex {v} has a neighbour out of range")
            if (nbrs >> v) & 1:
                raise GraphValidationError(f"Self-loop at vertex {v}")
            for u in iter_bits(nbrs):
                if not (self.adj[u] >> v) & 1:
                    raise GraphValidationError(f"Adjacency not symmetric for edge ({v}, {u})")

    # =========================
    # QUERIES
    # =========================
    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphValidationError(f"Vertex {v} out of range for graph of order {self.n}")

    def neighbors(self, v: int) -> VertexSet:
        self.check_vertex(v)
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def is_isolated(self, v: int) -> bool:
        self.check_vertex(v)
        return self.adj[v] == 0

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    @property
    def edge_count(self) -> int:
        return sum(nbrs.bit_count() for nbrs in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((nbrs.bit_count() for nbrs in self.adj), reverse=True))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# =========================
# CONSTRUCTION
# =========================
def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphValidationError(f"Vertex count must be non-negative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"Edge ({u}, {v}) has an endpoint out of range for n={n}")
        if u == v:
            raise GraphValidationError(f"Self-loop at vertex {u} rejected")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def edgeless(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


# =========================
# SUBGRAPHS
# =========================
def induced_by_mask(graph: Graph, mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph over a bitmask; the second item maps new ids to old ids."""
    old = tuple(iter_bits(mask & graph.vertex_mask))
    index = {u: i for i, u in enumerate(old)}
    adj = []
    for u in old:
        nbrs = 0
        for w in iter_bits(graph.adj[u] & mask):
            nbrs |= 1 << index[w]
        adj.append(nbrs)
    return Graph(len(old), tuple(adj)), old


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    chosen = set(vertices)
    for v in chosen:
        graph.check_vertex(v)
    return induced_by_mask(graph, mask_of(chosen))


def unit_sphere(graph: Graph, v: int) -> Graph:
    graph.check_vertex(v)
    return induced_by_mask(graph, graph.adj[v])[0]


def unit_ball(graph: Graph, v: int) -> Graph:
    graph.check_vertex(v)
    return induced_by_mask(graph, graph.adj[v] | (1 << v))[0]


# =========================
# GRAPH OPERATIONS
# =========================
def join(first: Graph, second: Graph) -> Graph:
    """Zykov sum: disjoint copies plus every edge between the two sides."""
    shift = first.n
    left_full = first.vertex_mask
    right_full = second.vertex_mask << shift
    adj = [nbrs | right_full for nbrs in first.adj]
    adj.extend((nbrs << shift) | left_full for nbrs in second.adj)
    return Graph(first.n + second.n, tuple(adj))


def disjoint_union(first: Graph, second: Graph) -> Graph:
    shift = first.n
    adj = list(first.adj)
    adj.extend(nbrs << shift for nbrs in second.adj)
    return Graph(first.n + second.n, tuple(adj))


def union_all(parts: Sequence[Graph]) -> Graph:
    result = edgeless(0)
    for part in parts:
        result = disjoint_union(result, part)
    return result


def join_all(parts: Sequence[Graph]) -> Graph:
    result = edgeless(0)
    for part in parts:
        result = join(result, part)
    return result


def connected_components(graph: Graph) -> list[VertexSet]:
    """Components ordered by their smallest member."""
    remaining = graph.vertex_mask
    components: list[VertexSet] = []
    while remaining:
        component = remaining & -remaining
        frontier = component
        while frontier:
            reached = 0
            for v in iter_bits(frontier):
                reached |= graph.adj[v]
            frontier = reached & ~component
            component |= frontier
        components.append(members(component))
        remaining &= ~component
    return components


def is_connected(graph: Graph) -> bool:
    return graph.n > 0 and len(connected_components(graph)) == 1


def relabel(graph: Graph, perm: Sequence[int]) -> Graph:
    """Rename vertex ``v`` to ``perm[v]``."""
    if sorted(perm) != list(range(graph.n)):
        raise GraphValidationError(f"Relabeling is not a permutation of 0..{graph.n - 1}")
    adj = [0] * graph.n
    for v, nbrs in enumerate(graph.adj):
        adj[perm[v]] = mask_of(perm[u] for u in iter_bits(nbrs))
    return Graph(graph.n, tuple(adj))

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from loguru import logger

from graphdim.analysis import cliques as clique_tools
from graphdim.core.graph import (
    Graph,
    iter_bits,
    join,
    join_all,
    mask_of,
    union_all,
    unit_ball,
    unit_sphere,
)
from graphdim.core.types import DimReport
from graphdim.errors import GraphValidationError

EMPTY_DIM = Fraction(-1)


@dataclass
class DimCache:
    """Dimensions of induced subgraphs of ``host``, keyed by vertex bitmask."""

    host: Graph
    table: dict[int, Fraction] = field(default_factory=dict)

    def get(self, mask: int) -> Fraction | None:
        return self.table.get(mask)

    def put(self, mask: int, value: Fraction) -> Fraction:
        # insert-if-absent; concurrent writers computed the same value
        return self.table.setdefault(mask, value)

    def __len__(self) -> int:
        return len(self.table)


class DimensionEngine:
    """
    Exact inductive dimension of a host graph and its induced subgraphs.

    dim(empty) = -1, otherwise the average over vertices of
    1 + dim(unit sphere). Spheres of induced subgraphs are induced
    subgraphs of the host, so every recursive call is keyed by a vertex
    subset of the host and memoized in a shared DimCache.
    """

    def __init__(
        self,
        graph: Graph,
        *,
        memoize: bool = True,
        workers: int = 1,
        cache: DimCache | None = None,
    ) -> None:
        if workers < 1:
            raise GraphValidationError(f"workers must be positive, got {workers}")
        if cache is not None and cache.host != graph:
            raise GraphValidationError("DimCache belongs to a different host graph")
        self.graph = graph
        self.memoize = memoize
        self.workers = workers
        self._cache = cache if cache is not None else DimCache(host=graph)

    @property
    def cache(self) -> DimCache:
        return self._cache

    @property
    def cache_size(self) -> int:
        return len(self._cache)

    def dim(self) -> Fraction:
        value = self.dim_of_mask(self.graph.vertex_mask)
        logger.debug(
            "dim={} n={} memoize={} cached_subsets={}",
            value,
            self.graph.n,
            self.memoize,
            self.cache_size,
        )
        return value

    def dim_of(self, vertices: Iterable[int]) -> Fraction:
        chosen = set(vertices)
        for v in chosen:
            self.graph.check_vertex(v)
        return self.dim_of_mask(mask_of(chosen))

    def dim_of_mask(self, mask: int) -> Fraction:
        if self.workers > 1 and mask.bit_count() > 1:
            return self._parallel_dim(mask)
        return self._dim_mask(mask)

    def vertex_dim(self, v: int) -> Fraction:
        self.graph.check_vertex(v)
        return 1 + self._dim_mask(self.graph.adj[v])

    def vertex_dims(self) -> tuple[Fraction, ...]:
        return tuple(self.vertex_dim(v) for v in range(self.graph.n))

    def _dim_mask(self, mask: int) -> Fraction:
        if mask == 0:
            return EMPTY_DIM
        if self.memoize:
            cached = self._cache.get(mask)
            if cached is not None:
                return cached

        adj = self.graph.adj
        total = Fraction(0)
        for v in iter_bits(mask):
            total += 1 + self._dim_mask(adj[v] & mask)
        value = total / mask.bit_count()

        if self.memoize:
            value = self._cache.put(mask, value)
        return value

    def _parallel_dim(self, mask: int) -> Fraction:
        if self.memoize:
            cached = self._cache.get(mask)
            if cached is not None:
                return cached
        adj = self.graph.adj
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            terms = list(pool.map(lambda v: 1 + self._dim_mask(adj[v] & mask), iter_bits(mask)))
        value = sum(terms, Fraction(0)) / mask.bit_count()
        if self.memoize:
            value = self._cache.put(mask, value)
        return value


# =========================
# MODULE-LEVEL OPERATIONS
# =========================
def dim(graph: Graph, *, memoize: bool = True, workers: int = 1) -> Fraction:
    return DimensionEngine(graph, memoize=memoize, workers=workers).dim()


def vertex_dim(graph: Graph, v: int) -> Fraction:
    return DimensionEngine(graph).vertex_dim(v)


def oracle_dim(graph: Graph) -> Fraction:
    """Direct recursion over materialised unit spheres, no cache at all."""
    if graph.n == 0:
        return EMPTY_DIM
    total = sum((1 + oracle_dim(unit_sphere(graph, v)) for v in range(graph.n)), Fraction(0))
    return total / graph.n


def dim_spectrum(graph: Graph, engine: DimensionEngine | None = None) -> DimReport:
    engine = engine or DimensionEngine(graph)
    vertex_dims = engine.vertex_dims()
    graph_dim = sum(vertex_dims, Fraction(0)) / graph.n if graph.n else EMPTY_DIM

    omega: int | None = None
    gamma: int | None = None
    pure = False
    if graph.n:
        found = clique_tools.maximal_cliques(graph)
        omega = clique_tools.clique_number(graph, found)
        gamma = clique_tools.min_clique_number(graph, found)
        pure = omega == gamma

    return DimReport(
        n=graph.n,
        graph_dim=graph_dim,
        vertex_dims=vertex_dims,
        is_uniform=len(set(vertex_dims)) <= 1,
        is_pure=pure,
        omega=omega,
        gamma=gamma,
    )


def check_disjoint_union_law(components: Sequence[Graph]) -> tuple[Fraction, Fraction]:
    """dim of the union against the order-weighted average of component dims."""
    total = sum(component.n for component in components)
    if total == 0:
        raise GraphValidationError("Disjoint-union law needs at least one nonempty component")
    lhs = dim(union_all(components))
    rhs = sum((component.n * dim(component) for component in components), Fraction(0)) / total
    return lhs, rhs


def check_join_law(first: Graph, second: Graph) -> tuple[Fraction, Fraction]:
    lhs = dim(join(first, second))
    rhs = 1 + dim(first) + dim(second)
    return lhs, rhs


def check_iterated_join_law(parts: Sequence[Graph]) -> tuple[Fraction, Fraction]:
    if not parts:
        raise GraphValidationError("Iterated join needs at least one part")
    lhs = dim(join_all(parts))
    rhs = (len(parts) - 1) + sum((dim(part) for part in parts), Fraction(0))
    return lhs, rhs


def check_ball_identity(
    graph: Graph,
    engine: DimensionEngine | None = None,
) -> list[tuple[int, Fraction, Fraction]]:
    """Per vertex: (v, vertex dimension, dimension of the unit ball)."""
    engine = engine or DimensionEngine(graph)
    return [(v, engine.vertex_dim(v), dim(unit_ball(graph, v))) for v in range(graph.n)]

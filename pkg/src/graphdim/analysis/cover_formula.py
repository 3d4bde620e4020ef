from __future__ import annotations

from collections import Counter
from fractions import Fraction

from graphdim.analysis.cliques import DEFAULT_CLIQUE_LIMIT, maximal_cliques
from graphdim.analysis.dimension import DimensionEngine
from graphdim.analysis.ecc import DEFAULT_NODE_BUDGET, min_edge_clique_cover, require_valid_cover
from graphdim.core.graph import Graph, is_connected, iter_bits, mask_of
from graphdim.core.types import BoundsReport, CliqueCover, PureCheck, SignatureCounts
from graphdim.errors import GraphValidationError, MalformedCoverError, ResourceLimitError

INCLUSION_EXCLUSION_MAX_CLIQUES = 12


def vertex_complete_cover(
    graph: Graph,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    clique_limit: int = DEFAULT_CLIQUE_LIMIT,
) -> CliqueCover:
    """Minimum edge clique cover plus {v} for every isolated vertex."""
    base = min_edge_clique_cover(graph, node_budget=node_budget, clique_limit=clique_limit)
    singles = [frozenset({v}) for v in range(graph.n) if graph.is_isolated(v)]
    cliques = sorted([*base.cliques, *singles], key=lambda q: tuple(sorted(q)))
    return CliqueCover(cliques=tuple(cliques), edgeless=base.edgeless)


def signature_counts(graph: Graph, cover: CliqueCover) -> SignatureCounts:
    """Count vertices by the exact set of cover cliques containing them."""
    for clique in cover.cliques:
        for v in clique:
            graph.check_vertex(v)
    counts: Counter[frozenset[int]] = Counter()
    for v in range(graph.n):
        signature = frozenset(i for i, clique in enumerate(cover.cliques) if v in clique)
        if not signature:
            raise MalformedCoverError(f"Vertex {v} lies in no cover clique")
        counts[signature] += 1
    return SignatureCounts(counts=dict(counts))


def inclusion_exclusion_counts(graph: Graph, cover: CliqueCover) -> SignatureCounts:
    """
    The same multiplicities by alternating sums over clique intersections:
    ||T|| = sum over U containing T of (-1)^(|U|-|T|) |intersection of U|.
    """
    m = cover.size
    if m > INCLUSION_EXCLUSION_MAX_CLIQUES:
        raise ResourceLimitError(
            f"Inclusion-exclusion cross-check limited to {INCLUSION_EXCLUSION_MAX_CLIQUES} cliques, got {m}"
        )
    clique_masks = [mask_of(clique) for clique in cover.cliques]
    full = (1 << m) - 1

    intersection = [0] * (1 << m)
    intersection[0] = graph.vertex_mask
    for subset in range(1, 1 << m):
        low = (subset & -subset).bit_length() - 1
        intersection[subset] = intersection[subset & (subset - 1)] & clique_masks[low]

    counts: dict[frozenset[int], int] = {}
    for subset in range(1, 1 << m):
        rest = full & ~subset
        total = 0
        extra = rest
        while True:
            sign = -1 if extra.bit_count() % 2 else 1
            total += sign * intersection[subset | extra].bit_count()
            if extra == 0:
                break
            extra = (extra - 1) & rest
        if total:
            counts[frozenset(iter_bits(subset))] = total
    return SignatureCounts(counts=counts)


def _cover_sides(
    graph: Graph,
    cover: CliqueCover,
    engine: DimensionEngine,
) -> tuple[int, Fraction]:
    """(|G| - |K_L|, sum over proper index sets T of ||T|| * dim G[union of T])."""
    require_valid_cover(graph, cover)
    counts = signature_counts(graph, cover)
    clique_masks = [mask_of(clique) for clique in cover.cliques]
    everything = frozenset(range(cover.size))

    denominator = graph.n - counts.get(everything)
    rhs = Fraction(0)
    for indices, count in sorted(counts.counts.items(), key=lambda item: sorted(item[0])):
        if indices == everything:
            continue
        union = 0
        for i in indices:
            union |= clique_masks[i]
        rhs += count * engine.dim_of_mask(union)
    return denominator, rhs


def dim_via_cover(
    graph: Graph,
    cover: CliqueCover,
    engine: DimensionEngine | None = None,
) -> Fraction:
    """Dimension from the clique-cover decomposition (verification, not speed)."""
    if graph.n == 0 or cover.size == 0:
        raise MalformedCoverError("Cover formula needs a nonempty graph and cover")
    if cover.size == 1:
        (only,) = cover.cliques
        if len(only) != graph.n:
            raise MalformedCoverError(f"Single cover clique misses {graph.n - len(only)} vertices")
        return Fraction(len(only) - 1)

    engine = engine or DimensionEngine(graph)
    denominator, rhs = _cover_sides(graph, cover, engine)
    if denominator == 0:
        raise MalformedCoverError("Every vertex lies in every cover clique; cover is not minimal")
    return rhs / denominator


def check_cover_formula(
    graph: Graph,
    cover: CliqueCover | None = None,
    engine: DimensionEngine | None = None,
) -> tuple[Fraction, Fraction]:
    """(|G| - |K_L|) * dim G against the cover decomposition."""
    if graph.n == 0:
        raise GraphValidationError("Cover formula is undefined for the empty graph")
    engine = engine or DimensionEngine(graph)
    if cover is None:
        cover = vertex_complete_cover(graph)
    denominator, rhs = _cover_sides(graph, cover, engine)
    return denominator * engine.dim(), rhs


def check_two_clique_lemma(
    graph: Graph,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[Fraction, Fraction]:
    cover = min_edge_clique_cover(graph, node_budget=node_budget)
    if cover.size != 2:
        raise MalformedCoverError(f"Two-clique lemma needs cover number 2, got {cover.size}")
    first, second = cover.cliques
    if len(first | second) != graph.n:
        raise MalformedCoverError("Two-clique lemma needs the two cliques to cover every vertex")

    shared = len(first & second)
    lhs = (graph.n - shared) * DimensionEngine(graph).dim()
    rhs = Fraction(len(first - second) * (len(first) - 1) + len(second - first) * (len(second) - 1))
    return lhs, rhs


def check_pure_corollary(graph: Graph, engine: DimensionEngine | None = None) -> PureCheck:
    if graph.n == 0:
        raise GraphValidationError("Pure-graph check is undefined for the empty graph")
    orders = {len(clique) for clique in maximal_cliques(graph)}
    if len(orders) != 1:
        raise GraphValidationError(f"Graph is not pure: maximal clique orders {sorted(orders)}")

    engine = engine or DimensionEngine(graph)
    expected = Fraction(orders.pop() - 1)
    return PureCheck(
        dim=engine.dim(),
        expected=expected,
        vertex_dims_ok=all(value == expected for value in engine.vertex_dims()),
    )


def bounds_report(graph: Graph, engine: DimensionEngine | None = None) -> BoundsReport:
    if graph.n == 0:
        raise GraphValidationError("Bounds are undefined for the empty graph")
    engine = engine or DimensionEngine(graph)
    found = maximal_cliques(graph)
    k = max(len(clique) for clique in found)
    ell = min(len(clique) for clique in found)
    n = graph.n
    value = engine.dim()
    connected = is_connected(graph)

    lower_basic = Fraction(k * (k - 1), n)
    lower_connected = None
    if connected and k >= 2:
        lower_connected = 1 + Fraction(k * k * (k - 1) * (k - 2), n * (k * (k - 2) + n))
    upper = Fraction(k - 1)

    return BoundsReport(
        n=n,
        omega=k,
        gamma=ell,
        connected=connected,
        dim=value,
        lower_basic=lower_basic,
        lower_connected=lower_connected,
        lower_clique=Fraction(ell - 1),
        upper=upper,
        saturated_lower=value == lower_basic,
        saturated_connected=lower_connected is not None and value == lower_connected,
        saturated_upper=value == upper,
    )

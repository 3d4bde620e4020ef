from __future__ import annotations

from itertools import combinations
from typing import Iterator

from loguru import logger

from graphdim.analysis.cliques import DEFAULT_CLIQUE_LIMIT, maximal_cliques
from graphdim.core.graph import Graph, VertexSet, iter_bits, mask_of
from graphdim.core.types import CliqueCover, CoverCheck
from graphdim.errors import GraphValidationError, ResourceLimitError

DEFAULT_NODE_BUDGET = 10_000_000
BRUTE_FORCE_MAX_CANDIDATES = 24


class _CoverProblem:
    """Set cover over edges with maximal cliques (order >= 2) as candidates."""

    def __init__(self, graph: Graph, clique_limit: int) -> None:
        self.graph = graph
        self.edges = graph.edges()
        edge_index = {edge: i for i, edge in enumerate(self.edges)}

        self.candidates: list[VertexSet] = [
            clique for clique in maximal_cliques(graph, limit=clique_limit) if len(clique) >= 2
        ]
        self.masks: list[int] = []
        for clique in self.candidates:
            ordered = sorted(clique)
            self.masks.append(mask_of(edge_index[pair] for pair in combinations(ordered, 2)))

        self.universe = (1 << len(self.edges)) - 1
        # candidates containing each edge, in candidate order
        self.containing: list[list[int]] = [[] for _ in self.edges]
        for c, mask in enumerate(self.masks):
            for e in iter_bits(mask):
                self.containing[e].append(c)

    def cover_of(self, chosen: list[int]) -> CliqueCover:
        cliques = sorted((self.candidates[c] for c in chosen), key=lambda q: tuple(sorted(q)))
        return CliqueCover(cliques=tuple(cliques))


def greedy_edge_clique_cover(graph: Graph, *, clique_limit: int = DEFAULT_CLIQUE_LIMIT) -> CliqueCover:
    """Most-uncovered-edges-first cover; ties go to the earlier candidate."""
    problem = _CoverProblem(graph, clique_limit)
    return problem.cover_of(_greedy(problem))


def _greedy(problem: _CoverProblem, uncovered: int | None = None) -> list[int]:
    if uncovered is None:
        uncovered = problem.universe
    chosen: list[int] = []
    while uncovered:
        best = max(
            range(len(problem.masks)),
            key=lambda c: ((problem.masks[c] & uncovered).bit_count(), -c),
        )
        chosen.append(best)
        uncovered &= ~problem.masks[best]
    return chosen


def _forced(problem: _CoverProblem) -> list[int]:
    """Candidates that are the only clique containing some edge."""
    return sorted({options[0] for options in problem.containing if len(options) == 1})


def min_edge_clique_cover(
    graph: Graph,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    clique_limit: int = DEFAULT_CLIQUE_LIMIT,
) -> CliqueCover:
    """
    Exact minimum edge clique cover by branch and bound.

    Cliques that alone contain some edge are taken up front. The rest is
    searched depth first on an explicit stack, branching on the uncovered
    edge with the fewest candidate cliques, pruning with
    ceil(uncovered / best single-candidate gain) and starting from the
    greedy cover. Exceeding ``node_budget`` raises ResourceLimitError
    instead of returning a possibly suboptimal cover.
    """
    if graph.edge_count == 0:
        logger.warning("Edgeless graph (n={}): empty edge clique cover", graph.n)
        return CliqueCover(cliques=(), edgeless=True)

    problem = _CoverProblem(graph, clique_limit)
    chosen = _forced(problem)
    forced = len(chosen)
    start = problem.universe
    for c in chosen:
        start &= ~problem.masks[c]
    best = chosen + _greedy(problem, start)
    nodes = 0

    def lower_bound(uncovered: int) -> int:
        gain = max((mask & uncovered).bit_count() for mask in problem.masks)
        return -(-uncovered.bit_count() // gain)

    def expand(uncovered: int) -> list[int] | None:
        """Branch options at this node, or None when it is a leaf or pruned."""
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimitError(
                f"Edge clique cover search exceeded node budget {node_budget} (n={graph.n})"
            )
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
            return None
        if len(chosen) + lower_bound(uncovered) >= len(best):
            return None

        edge = min(
            iter_bits(uncovered),
            key=lambda e: (len(problem.containing[e]), e),
        )
        return sorted(
            problem.containing[edge],
            key=lambda c: (-(problem.masks[c] & uncovered).bit_count(), c),
        )

    # each frame is (uncovered edges, remaining options); frames above the
    # root each own the last entry of ``chosen``
    stack: list[tuple[int, Iterator[int]]] = []
    options = expand(start)
    if options is not None:
        stack.append((start, iter(options)))
    while stack:
        uncovered, pending = stack[-1]
        c = next(pending, None)
        if c is None:
            stack.pop()
            if stack:
                chosen.pop()
            continue
        chosen.append(c)
        child = uncovered & ~problem.masks[c]
        options = expand(child)
        if options is None:
            chosen.pop()
        else:
            stack.append((child, iter(options)))

    logger.debug(
        "ECC n={} m={} candidates={} forced={} theta_e={} nodes={}",
        graph.n,
        len(problem.edges),
        len(problem.candidates),
        forced,
        len(best),
        nodes,
    )
    return problem.cover_of(best)


def ecc_number(
    graph: Graph,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    clique_limit: int = DEFAULT_CLIQUE_LIMIT,
) -> int:
    return min_edge_clique_cover(graph, node_budget=node_budget, clique_limit=clique_limit).size


def brute_force_ecc(graph: Graph) -> CliqueCover:
    """Smallest subset of maximal cliques covering every edge, by exhaustion."""
    if graph.edge_count == 0:
        return CliqueCover(cliques=(), edgeless=True)
    problem = _CoverProblem(graph, DEFAULT_CLIQUE_LIMIT)
    if len(problem.candidates) > BRUTE_FORCE_MAX_CANDIDATES:
        raise ResourceLimitError(
            f"Brute-force cover limited to {BRUTE_FORCE_MAX_CANDIDATES} candidates, "
            f"got {len(problem.candidates)}"
        )
    indices = range(len(problem.candidates))
    for size in range(1, len(problem.candidates) + 1):
        for subset in combinations(indices, size):
            covered = 0
            for c in subset:
                covered |= problem.masks[c]
            if covered == problem.universe:
                return problem.cover_of(list(subset))
    raise AssertionError("maximal cliques always cover every edge")


def verify_cover(graph: Graph, cover: CliqueCover) -> CoverCheck:
    non_cliques: list[VertexSet] = []
    covered: set[tuple[int, int]] = set()
    for clique in cover.cliques:
        for v in clique:
            graph.check_vertex(v)
        ordered = sorted(clique)
        pairs = list(combinations(ordered, 2))
        if any(not graph.has_edge(u, v) for u, v in pairs):
            non_cliques.append(clique)
            continue
        covered.update(pairs)

    uncovered = tuple(edge for edge in graph.edges() if edge not in covered)
    return CoverCheck(
        valid=not uncovered and not non_cliques,
        uncovered_edges=uncovered,
        non_cliques=tuple(non_cliques),
    )


def require_valid_cover(graph: Graph, cover: CliqueCover) -> None:
    check = verify_cover(graph, cover)
    if not check.valid:
        raise GraphValidationError(
            f"Not an edge clique cover: uncovered={list(check.uncovered_edges)} "
            f"non_cliques={[sorted(q) for q in check.non_cliques]}"
        )

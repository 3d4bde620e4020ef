# src/service/suite.py
from __future__ import annotations

import time
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable

import numpy as np
from loguru import logger

from graphdim.analysis.cliques import brute_force_maximal_cliques, maximal_cliques
from graphdim.analysis.cover_formula import (
    INCLUSION_EXCLUSION_MAX_CLIQUES,
    bounds_report,
    check_cover_formula,
    check_pure_corollary,
    inclusion_exclusion_counts,
    signature_counts,
    vertex_complete_cover,
)
from graphdim.analysis.dimension import (
    DimensionEngine,
    check_ball_identity,
    check_disjoint_union_law,
    check_iterated_join_law,
    check_join_law,
    dim,
    dim_spectrum,
    oracle_dim,
)
from graphdim.analysis.ecc import brute_force_ecc, min_edge_clique_cover, verify_cover
from graphdim.core.graph import (
    Graph,
    complete,
    connected_components,
    edgeless,
    is_connected,
    join,
    join_all,
    relabel,
    union_all,
    unit_sphere,
)
from graphdim.core.rational import format_rational
from graphdim.generators.families import (
    SEED_LIMIT,
    clique_plus_isolated,
    complete_multipartite,
    cycle,
    double_clique_matching,
    erdos_renyi,
    inflated_cube,
    path,
    petersen,
    pure_glued,
    random_connected,
    random_tree,
    rng_for,
    star_clique,
    windmill,
)
from graphdim.providers.edge_list import parse_edge_list, serialize_edge_list
from graphdim.providers.graph6 import parse_graph6, parse_graph6_lines, serialize_graph6
from graphdim.state.regression_state import load_regression, save_regression
from graphdim.utils.engine_config import EngineConfig
from graphdim.utils.suite_config import SuiteConfig

EDGE_PROBABILITIES = tuple(Fraction(*pair) for pair in ((1, 4), (1, 3), (1, 2), (2, 3), (3, 4)))
MAX_FAILURE_SAMPLES = 5
REGRESSION_KEY = "erdos_renyi:n=8,p=1/2,seed=42"
# dim of that instance from the unmemoized recursion; also in state/regressions.json
REGRESSION_VALUE = "145/96"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    instances: int
    failures: tuple[str, ...] = ()
    elapsed_ms: float = 0.0


@dataclass(frozen=True)
class SuiteResult:
    profile: str
    seed: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed(self) -> list[str]:
        return [check.name for check in self.checks if not check.passed]


@dataclass
class _Tally:
    instances: int = 0
    failed: int = 0
    samples: list[str] = field(default_factory=list)

    def expect(self, condition: bool, message: str) -> None:
        self.instances += 1
        if condition:
            return
        self.failed += 1
        if len(self.samples) < MAX_FAILURE_SAMPLES:
            self.samples.append(message)


# =========================
# RANDOM INPUTS
# =========================
def _rng(config: SuiteConfig, name: str) -> np.random.Generator:
    # one stream per check, keyed by crc32 of its name
    return rng_for((config.seed + zlib.crc32(name.encode("ascii"))) % SEED_LIMIT)


def _seed(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 1 << 63))


def _probability(rng: np.random.Generator) -> Fraction:
    return EDGE_PROBABILITIES[int(rng.integers(0, len(EDGE_PROBABILITIES)))]


def _random_graph(rng: np.random.Generator, n: int) -> Graph:
    return erdos_renyi(n, _probability(rng), _seed(rng))


def _random_connected(rng: np.random.Generator, n: int) -> Graph:
    return random_connected(n, _probability(rng), _seed(rng))


def _describe(graph: Graph) -> str:
    return f"n={graph.n} edges={graph.edges()}"


# =========================
# CORPORA
# =========================
def _base_corpus(config: SuiteConfig) -> list[tuple[Graph, Fraction]]:
    """(graph, expected dim) pairs for the closed-form base values."""
    cases: list[tuple[Graph, Fraction]] = [(edgeless(0), Fraction(-1))]
    cases.extend((edgeless(n), Fraction(0)) for n in range(1, 11))
    cases.extend((complete(n), Fraction(n - 1)) for n in range(1, 9))
    cases.extend((cycle(n), Fraction(1)) for n in range(4, 13))
    cases.append((cycle(3), Fraction(2)))

    rng = _rng(config, "trees")
    for _ in range(config.random_trees):
        n = int(rng.integers(2, config.max_tree_order + 1))
        cases.append((random_tree(n, _seed(rng)), Fraction(1)))
    return cases


def _join_pairs(config: SuiteConfig) -> list[tuple[Graph, Graph]]:
    rng = _rng(config, "join")
    pairs = []
    for _ in range(config.join_pairs):
        total = int(rng.integers(1, config.max_join_order + 1))
        left = int(rng.integers(0, total + 1))
        pairs.append((_random_graph(rng, left), _random_graph(rng, total - left)))
    return pairs


def _join_triples(config: SuiteConfig) -> list[tuple[Graph, Graph, Graph]]:
    rng = _rng(config, "triples")
    triples = []
    for _ in range(config.join_triples):
        total = int(rng.integers(3, config.max_triple_order + 1))
        a = int(rng.integers(1, total - 1))
        b = int(rng.integers(1, total - a))
        triples.append(
            (_random_graph(rng, a), _random_graph(rng, b), _random_graph(rng, total - a - b))
        )
    return triples


def _union_parts(config: SuiteConfig) -> list[list[Graph]]:
    rng = _rng(config, "union")
    corpus = []
    for _ in range(config.union_graphs):
        count = int(rng.integers(2, 5))
        remaining = config.max_union_order
        parts = []
        for i in range(count):
            largest = min(6, remaining - (count - i - 1))
            size = int(rng.integers(1, largest + 1))
            remaining -= size
            parts.append(_random_connected(rng, size))
        corpus.append(parts)
    return corpus


def _connected_corpus(config: SuiteConfig) -> list[Graph]:
    if config.corpus_path:
        text = Path(config.corpus_path).read_text(encoding="utf-8")
        graphs = [g for g in parse_graph6_lines(text) if 2 <= g.n <= config.max_n and is_connected(g)]
        logger.info("Loaded {} connected graphs from {}", len(graphs), config.corpus_path)
        return graphs

    rng = _rng(config, "connected")
    return [
        _random_connected(rng, int(rng.integers(2, config.max_n + 1)))
        for _ in range(config.theorem4_samples)
    ]


def _small_corpus(config: SuiteConfig, name: str, count: int, max_order: int) -> list[Graph]:
    rng = _rng(config, name)
    return [_random_graph(rng, int(rng.integers(1, max_order + 1))) for _ in range(count)]


def _family_corpus() -> list[Graph]:
    return [
        edgeless(0),
        edgeless(3),
        complete(5),
        cycle(7),
        path(6),
        star_clique(4, 12),
        inflated_cube(),
        double_clique_matching(4),
        windmill(3),
        petersen(),
        complete_multipartite([2, 3, 1]),
        clique_plus_isolated(4, 4),
        pure_glued(10, 4, 7),
        erdos_renyi(8, Fraction(1, 2), 42),
        random_tree(15, 3),
    ]


# =========================
# CHECKS
# =========================
def _check_base_values(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    tally = _Tally()
    for graph, expected in _base_corpus(config):
        value = dim(graph, memoize=engine_config.memoize)
        tally.expect(value == expected, f"{_describe(graph)}: dim {value} != {expected}")
    return tally


def _check_join_law(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    tally = _Tally()
    for first, second in _join_pairs(config):
        lhs, rhs = check_join_law(first, second)
        tally.expect(lhs == rhs, f"join of n={first.n}, n={second.n}: {lhs} != {rhs}")
    for parts in _join_triples(config):
        lhs, rhs = check_iterated_join_law(parts)
        tally.expect(lhs == rhs, f"iterated join {[p.n for p in parts]}: {lhs} != {rhs}")
    return tally


def _check_union_law(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    tally = _Tally()
    for parts in _union_parts(config):
        lhs, rhs = check_disjoint_union_law(parts)
        tally.expect(lhs == rhs, f"union {[p.n for p in parts]}: {lhs} != {rhs}")
    return tally


def _check_ball_identity(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    graphs = [graph for graph, _ in _base_corpus(config)]
    graphs.extend(join(first, second) for first, second in _join_pairs(config))
    graphs.extend(join_all(parts) for parts in _join_triples(config))
    graphs.extend(union_all(parts) for parts in _union_parts(config))

    tally = _Tally()
    for graph in graphs:
        bad = [v for v, local, ball in check_ball_identity(graph) if local != ball]
        tally.expect(not bad, f"{_describe(graph)}: ball mismatch at {bad}")
    return tally


def _check_theorem4(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    tally = _Tally()
    for graph in _connected_corpus(config):
        engine = DimensionEngine(graph)
        cover = vertex_complete_cover(
            graph,
            node_budget=engine_config.node_budget,
            clique_limit=engine_config.clique_limit,
        )
        lhs, rhs = check_cover_formula(graph, cover, engine)
        tally.expect(lhs == rhs, f"{_describe(graph)}: {lhs} != {rhs}")
        if cover.size <= INCLUSION_EXCLUSION_MAX_CLIQUES:
            direct = signature_counts(graph, cover)
            alternating = inclusion_exclusion_counts(graph, cover)
            tally.expect(
                direct == alternating,
                f"{_describe(graph)}: signature counts disagree with inclusion-exclusion",
            )
    return tally


def _check_pure_corollary(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    rng = _rng(config, "pure")
    tally = _Tally()
    for i in range(config.pure_graphs):
        order = (2, 3, 4)[i % 3]
        n = int(rng.integers(order, config.max_pure_order + 1))
        graph = pure_glued(n, order, _seed(rng), max_attempts=engine_config.pure_glued_attempts)
        result = check_pure_corollary(graph)
        tally.expect(
            result.dim == result.expected and result.vertex_dims_ok,
            f"pure_glued({n}, {order}): dim {result.dim}, expected {result.expected}",
        )
    for t in range(1, 6):
        value = dim(windmill(t))
        tally.expect(value == 2, f"windmill({t}): dim {value} != 2")
    return tally


def _check_constructions(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    tally = _Tally()

    matching = dim_spectrum(double_clique_matching(4))
    tally.expect(
        set(matching.vertex_dims) == {Fraction(5, 2)} and matching.is_uniform and not matching.is_pure,
        f"double_clique_matching(4): {matching}",
    )

    cube_graph = inflated_cube()
    cube = dim_spectrum(cube_graph)
    tally.expect(
        set(cube.vertex_dims) == {Fraction(2)}
        and cube.is_uniform
        and not cube.is_pure
        and (cube.omega, cube.gamma) == (4, 2),
        f"inflated_cube: {cube}",
    )
    for v in range(cube_graph.n):
        sphere = unit_sphere(cube_graph, v)
        sizes = sorted(len(component) for component in connected_components(sphere))
        tally.expect(sizes == [1, 1, 1, 3], f"inflated_cube sphere at {v}: components {sizes}")
    return tally


def _check_bounds(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    tally = _Tally()
    for graph in _connected_corpus(config):
        problems = bounds_report(graph).violations()
        tally.expect(not problems, f"{_describe(graph)}: {problems}")

    lower = bounds_report(clique_plus_isolated(4, 4))
    tally.expect(
        lower.dim == Fraction(3, 2) and lower.saturated_lower,
        f"K_4 plus 4 isolated: dim {lower.dim}, lower {lower.lower_basic}",
    )
    star = bounds_report(star_clique(4, 12))
    tally.expect(
        star.dim == Fraction(7, 5) and star.saturated_connected,
        f"star_clique(4, 12): dim {star.dim}, lower {star.lower_connected}",
    )
    for n in range(1, 9):
        tally.expect(bounds_report(complete(n)).saturated_upper, f"K_{n} misses the upper bound")
    return tally


def _check_ecc(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    tally = _Tally()
    for graph in _small_corpus(config, "ecc", config.ecc_instances, config.max_ecc_order):
        cover = min_edge_clique_cover(
            graph,
            node_budget=engine_config.node_budget,
            clique_limit=engine_config.clique_limit,
        )
        exhaustive = brute_force_ecc(graph)
        tally.expect(
            verify_cover(graph, cover).valid and cover.size == exhaustive.size,
            f"{_describe(graph)}: solver {cover.size}, brute force {exhaustive.size}",
        )

    for graph in [cycle(n) for n in range(4, 13)] + [petersen()]:
        size = min_edge_clique_cover(graph, node_budget=engine_config.node_budget).size
        tally.expect(size == graph.edge_count, f"{_describe(graph)}: theta_e {size}")
    return tally


def _check_oracle(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    rng = _rng(config, "relabel")
    tally = _Tally()
    for graph in _small_corpus(config, "oracle", config.oracle_graphs, config.max_oracle_order):
        memoized = dim(graph)
        direct = oracle_dim(graph)
        tally.expect(memoized == direct, f"{_describe(graph)}: memo {memoized} != oracle {direct}")
        for _ in range(config.relabelings):
            perm = [int(v) for v in rng.permutation(graph.n)]
            moved = dim(relabel(graph, perm))
            tally.expect(moved == memoized, f"{_describe(graph)}: relabel {perm} gives {moved}")
    return tally


def _check_cliques(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    tally = _Tally()
    for graph in _small_corpus(config, "cliques", config.clique_graphs, config.max_clique_order):
        fast = maximal_cliques(graph, limit=engine_config.clique_limit)
        slow = brute_force_maximal_cliques(graph)
        tally.expect(fast == slow, f"{_describe(graph)}: {len(fast)} vs {len(slow)} cliques")
    return tally


def _check_round_trips(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    tally = _Tally()
    for graph in _family_corpus():
        tally.expect(
            parse_edge_list(serialize_edge_list(graph)) == graph,
            f"edge list round trip: {_describe(graph)}",
        )
        tally.expect(
            parse_graph6(serialize_graph6(graph)) == graph,
            f"graph6 round trip: {_describe(graph)}",
        )
    return tally


def _check_regression(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    tally = _Tally()
    graph = erdos_renyi(8, Fraction(1, 2), 42)
    value = dim(graph)
    tally.expect(value == oracle_dim(graph), f"{_describe(graph)}: memo and oracle disagree")
    tally.expect(
        format_rational(value) == REGRESSION_VALUE,
        f"{REGRESSION_KEY}: expected {REGRESSION_VALUE}, computed {format_rational(value)}",
    )

    pinned = load_regression(REGRESSION_KEY)
    if pinned is None:
        save_regression(REGRESSION_KEY, format_rational(value))
        logger.info("Pinned regression {} = {}", REGRESSION_KEY, format_rational(value))
    else:
        tally.expect(
            pinned == format_rational(value),
            f"{REGRESSION_KEY}: pinned {pinned}, computed {format_rational(value)}",
        )
    return tally


def _check_performance(config: SuiteConfig, engine_config: EngineConfig) -> _Tally:
    tally = _Tally()
    graph = erdos_renyi(config.perf_n, config.perf_p, config.perf_seed)

    started = time.perf_counter()
    value = DimensionEngine(graph, workers=engine_config.workers).dim()
    elapsed = time.perf_counter() - started
    tally.expect(
        elapsed <= config.perf_limit_seconds,
        f"dim of G({config.perf_n}, {config.perf_p}) took {elapsed:.1f}s",
    )

    if graph.n <= config.unmemoized_max_n:
        tally.expect(value == oracle_dim(graph), f"{_describe(graph)}: memo and oracle disagree")
    else:
        logger.info("Skipping unmemoized run above n={}", config.unmemoized_max_n)
    logger.debug("Performance instance n={} dim={} in {:.3f}s", graph.n, value, elapsed)
    return tally


CHECKS: tuple[tuple[str, Callable[[SuiteConfig, EngineConfig], _Tally]], ...] = (
    ("base_values", _check_base_values),
    ("join_law", _check_join_law),
    ("union_law", _check_union_law),
    ("ball_identity", _check_ball_identity),
    ("theorem4", _check_theorem4),
    ("pure_corollary", _check_pure_corollary),
    ("constructions", _check_constructions),
    ("bounds", _check_bounds),
    ("ecc_optimality", _check_ecc),
    ("oracle_equivalence", _check_oracle),
    ("performance", _check_performance),
    ("clique_enumeration", _check_cliques),
    ("format_round_trip", _check_round_trips),
    ("regression", _check_regression),
)


# =========================
# ENTRYPOINT
# =========================
def _run_check(
    name: str,
    check: Callable[[SuiteConfig, EngineConfig], _Tally],
    config: SuiteConfig,
    engine_config: EngineConfig,
) -> CheckResult:
    started = time.perf_counter()
    tally = check(config, engine_config)
    elapsed_ms = (time.perf_counter() - started) * 1000

    result = CheckResult(
        name=name,
        passed=tally.failed == 0,
        instances=tally.instances,
        failures=tuple(tally.samples),
        elapsed_ms=round(elapsed_ms, 3),
    )
    if result.passed:
        logger.info("✅ {}: {} instances in {:.0f} ms", name, result.instances, elapsed_ms)
    else:
        logger.error("❌ {}: {}/{} failed, e.g. {}", name, tally.failed, tally.instances, tally.samples[0])
    return result


def run_suite(
    config: SuiteConfig,
    engine_config: EngineConfig | None = None,
    only: list[str] | None = None,
) -> SuiteResult:
    engine_config = engine_config or EngineConfig()
    selected = [(name, check) for name, check in CHECKS if only is None or name in only]
    logger.info("Running {} suite checks (profile={}, seed={})", len(selected), config.profile, config.seed)

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            results = list(
                pool.map(lambda item: _run_check(item[0], item[1], config, engine_config), selected)
            )
    else:
        results = [_run_check(name, check, config, engine_config) for name, check in selected]

    return SuiteResult(profile=config.profile, seed=config.seed, checks=tuple(results))

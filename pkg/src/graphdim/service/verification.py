# src/service/verification.py
from __future__ import annotations

from typing import Callable, Iterable

from loguru import logger

from graphdim.analysis.cover_formula import (
    bounds_report,
    check_cover_formula,
    vertex_complete_cover,
)
from graphdim.analysis.dimension import (
    DimensionEngine,
    check_ball_identity,
    check_disjoint_union_law,
    check_join_law,
)
from graphdim.core.graph import Graph, complete, connected_components, induced_subgraph
from graphdim.core.rational import format_rational
from graphdim.core.types import BoundsReport, Law, LawCheck
from graphdim.errors import LawViolationError
from graphdim.utils.engine_config import EngineConfig

LAW_ORDER = (Law.JOIN, Law.UNION, Law.THEOREM4, Law.BALL, Law.BOUNDS)


def expand_laws(laws: Iterable[Law | str]) -> list[Law]:
    requested = {Law(law) for law in laws}
    if not requested or Law.ALL in requested:
        return list(LAW_ORDER)
    return [law for law in LAW_ORDER if law in requested]


def _pair(lhs, rhs) -> dict:
    return {"lhs": format_rational(lhs), "rhs": format_rational(rhs), "equal": lhs == rhs}


def bounds_to_dict(report: BoundsReport) -> dict:
    return {
        "n": report.n,
        "omega": report.omega,
        "gamma": report.gamma,
        "connected": report.connected,
        "dim": format_rational(report.dim),
        "lower_basic": format_rational(report.lower_basic),
        "lower_connected": (
            None if report.lower_connected is None else format_rational(report.lower_connected)
        ),
        "lower_clique": format_rational(report.lower_clique),
        "upper": format_rational(report.upper),
        "saturated_lower": report.saturated_lower,
        "saturated_connected": report.saturated_connected,
        "saturated_upper": report.saturated_upper,
    }


# =========================
# INDIVIDUAL LAWS
# =========================
def _join(graph: Graph, engine: DimensionEngine, config: EngineConfig) -> LawCheck:
    with_self = _pair(*check_join_law(graph, graph))
    with_vertex = _pair(*check_join_law(graph, complete(1)))
    return LawCheck(
        law=Law.JOIN,
        passed=with_self["equal"] and with_vertex["equal"],
        details={"self_join": with_self, "vertex_join": with_vertex},
    )


def _union(graph: Graph, engine: DimensionEngine, config: EngineConfig) -> LawCheck:
    if graph.n == 0:
        return LawCheck(law=Law.UNION, passed=True, details={"skipped": "empty graph"})
    parts = [induced_subgraph(graph, component)[0] for component in connected_components(graph)]
    result = _pair(*check_disjoint_union_law(parts))
    result["components"] = len(parts)
    return LawCheck(law=Law.UNION, passed=result["equal"], details=result)


def _theorem4(graph: Graph, engine: DimensionEngine, config: EngineConfig) -> LawCheck:
    if graph.n == 0:
        return LawCheck(law=Law.THEOREM4, passed=True, details={"skipped": "empty graph"})
    cover = vertex_complete_cover(
        graph,
        node_budget=config.node_budget,
        clique_limit=config.clique_limit,
    )
    result = _pair(*check_cover_formula(graph, cover, engine))
    result["cover"] = [sorted(clique) for clique in cover.cliques]
    return LawCheck(law=Law.THEOREM4, passed=result["equal"], details=result)


def _ball(graph: Graph, engine: DimensionEngine, config: EngineConfig) -> LawCheck:
    mismatches = [
        {"vertex": v, "vertex_dim": format_rational(local), "ball_dim": format_rational(ball)}
        for v, local, ball in check_ball_identity(graph, engine)
        if local != ball
    ]
    return LawCheck(
        law=Law.BALL,
        passed=not mismatches,
        details={"vertices": graph.n, "mismatches": mismatches},
    )


def _bounds(graph: Graph, engine: DimensionEngine, config: EngineConfig) -> LawCheck:
    if graph.n == 0:
        return LawCheck(law=Law.BOUNDS, passed=True, details={"skipped": "empty graph"})
    report = bounds_report(graph, engine)
    violations = report.violations()
    return LawCheck(
        law=Law.BOUNDS,
        passed=not violations,
        details={**bounds_to_dict(report), "violations": violations},
    )


_CHECKS: dict[Law, Callable[[Graph, DimensionEngine, EngineConfig], LawCheck]] = {
    Law.JOIN: _join,
    Law.UNION: _union,
    Law.THEOREM4: _theorem4,
    Law.BALL: _ball,
    Law.BOUNDS: _bounds,
}


# =========================
# ENTRYPOINTS
# =========================
def verify_laws(
    graph: Graph,
    laws: Iterable[Law | str] = (Law.ALL,),
    config: EngineConfig | None = None,
) -> list[LawCheck]:
    config = config or EngineConfig()
    engine = DimensionEngine(graph, memoize=config.memoize, workers=config.workers)
    results: list[LawCheck] = []
    for law in expand_laws(laws):
        check = _CHECKS[law](graph, engine, config)
        if check.passed:
            logger.info("Law {} holds on n={}", law.value, graph.n)
        else:
            logger.warning("Law {} violated on n={}: {}", law.value, graph.n, check.details)
        results.append(check)
    return results


def enforce_laws(checks: Iterable[LawCheck]) -> None:
    failed = [check.law.value for check in checks if not check.passed]
    if failed:
        raise LawViolationError(f"Violated laws: {', '.join(failed)}")

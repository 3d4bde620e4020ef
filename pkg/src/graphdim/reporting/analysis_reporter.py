from __future__ import annotations

import json
import time
from contextlib import contextmanager
from typing import Iterator

from graphdim.analysis.cliques import maximal_cliques
from graphdim.analysis.cover_formula import bounds_report, check_cover_formula, vertex_complete_cover
from graphdim.analysis.dimension import DimensionEngine, dim_spectrum
from graphdim.analysis.ecc import min_edge_clique_cover
from graphdim.core.graph import connected_components
from graphdim.core.rational import decimal_display, format_rational
from graphdim.providers.document import GraphDocument
from graphdim.service.suite import SuiteResult
from graphdim.service.verification import bounds_to_dict
from graphdim.utils.engine_config import EngineConfig

REPORT_VERSION = 1


class _Stopwatch:
    def __init__(self) -> None:
        self.timings: dict[str, float] = {}

    @contextmanager
    def lap(self, name: str) -> Iterator[None]:
        started = time.perf_counter()
        yield
        self.timings[name] = round((time.perf_counter() - started) * 1000, 3)


def build_analysis_report(
    document: GraphDocument,
    config: EngineConfig | None = None,
    *,
    timings: bool = False,
) -> dict:
    """
    Full analysis of one graph as a JSON-ready dict.

    Rationals are ``p/q`` strings; ``dim.decimal`` is display only.
    Timings are added only on request so the default output is
    byte-identical across runs.
    """
    config = config or EngineConfig()
    graph = document.graph
    engine = DimensionEngine(graph, memoize=config.memoize, workers=config.workers)
    watch = _Stopwatch()

    with watch.lap("dim"):
        spectrum = dim_spectrum(graph, engine)
    with watch.lap("cliques"):
        cliques = maximal_cliques(graph, limit=config.clique_limit)
    with watch.lap("ecc"):
        cover = min_edge_clique_cover(
            graph,
            node_budget=config.node_budget,
            clique_limit=config.clique_limit,
        )

    theorem4 = None
    bounds = None
    if graph.n:
        with watch.lap("theorem4"):
            full_cover = vertex_complete_cover(
                graph,
                node_budget=config.node_budget,
                clique_limit=config.clique_limit,
            )
            lhs, rhs = check_cover_formula(graph, full_cover, engine)
        theorem4 = {
            "lhs": format_rational(lhs),
            "rhs": format_rational(rhs),
            "equal": lhs == rhs,
        }
        with watch.lap("bounds"):
            bounds = bounds_to_dict(bounds_report(graph, engine))

    report = {
        "version": REPORT_VERSION,
        "label": document.label,
        "format": document.format.value,
        "graph": {
            "n": graph.n,
            "m": graph.edge_count,
            "components": len(connected_components(graph)),
        },
        "dim": {
            "exact": format_rational(spectrum.graph_dim),
            "decimal": decimal_display(spectrum.graph_dim),
        },
        "vertex_dims": [format_rational(value) for value in spectrum.vertex_dims],
        "omega": spectrum.omega,
        "gamma": spectrum.gamma,
        "theta_e": cover.size,
        "is_pure": spectrum.is_pure,
        "is_uniform": spectrum.is_uniform,
        "maximal_cliques": [sorted(clique) for clique in cliques],
        "cover": [sorted(clique) for clique in cover.cliques],
        "theorem4": theorem4,
        "bounds": bounds,
    }
    if timings:
        report["timings_ms"] = watch.timings
    return report


def build_suite_report(result: SuiteResult, *, timings: bool = False) -> dict:
    checks = []
    for check in result.checks:
        entry = {
            "name": check.name,
            "passed": check.passed,
            "instances": check.instances,
            "failures": list(check.failures),
        }
        if timings:
            entry["elapsed_ms"] = check.elapsed_ms
        checks.append(entry)
    return {
        "version": REPORT_VERSION,
        "profile": result.profile,
        "seed": result.seed,
        "passed": result.passed,
        "checks": checks,
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"

# src/cli.py
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from dotenv import load_dotenv
from loguru import logger

from graphdim import __version__
from graphdim.analysis.cliques import maximal_cliques
from graphdim.analysis.cover_formula import bounds_report
from graphdim.analysis.dimension import DimensionEngine, dim_spectrum
from graphdim.analysis.ecc import min_edge_clique_cover
from graphdim.config.engine_config_store import DEFAULT_CONFIG_NAME
from graphdim.core.rational import format_rational
from graphdim.core.types import GenFamily, GraphFormat, Law
from graphdim.errors import GraphDimError, LawViolationError, ResourceLimitError
from graphdim.generators.families import GenSpec, build_graph, parse_params
from graphdim.providers.document import load_document, serialize, write_document
from graphdim.reporting.analysis_reporter import build_analysis_report, build_suite_report, dump_report
from graphdim.service.config_builder import EngineConfigBuilder
from graphdim.service.profiles import SUITE_PROFILES, suite_config_for
from graphdim.service.suite import run_suite
from graphdim.service.verification import bounds_to_dict, enforce_laws, verify_laws
from graphdim.utils.engine_config import EngineConfig
from graphdim.utils.logging_config import setup_logging

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_LAW = 4

INPUT_FORMATS = [GraphFormat.EDGE_LIST.value, GraphFormat.GRAPH6.value]


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _load(args: argparse.Namespace):
    fmt = GraphFormat(args.format) if args.format else None
    return load_document(args.file, fmt)


# =========================
# COMMANDS
# =========================
def cmd_dim(args: argparse.Namespace, config: EngineConfig) -> int:
    document = _load(args)
    if args.json:
        _out(dump_report(build_analysis_report(document, config, timings=args.timings)))
        return EXIT_OK
    engine = DimensionEngine(document.graph, memoize=config.memoize, workers=config.workers)
    _out(format_rational(engine.dim()))
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace, config: EngineConfig) -> int:
    graph = _load(args).graph
    report = dim_spectrum(graph, DimensionEngine(graph, memoize=config.memoize, workers=config.workers))
    if args.json:
        _out(dump_report({
            "dim": format_rational(report.graph_dim),
            "vertex_dims": [format_rational(value) for value in report.vertex_dims],
            "is_uniform": report.is_uniform,
            "is_pure": report.is_pure,
        }))
        return EXIT_OK
    for v, value in enumerate(report.vertex_dims):
        _out(f"{v}: {format_rational(value)}")
    _out(f"dim: {format_rational(report.graph_dim)}")
    _out(f"uniform: {_bool(report.is_uniform)}")
    _out(f"pure: {_bool(report.is_pure)}")
    return EXIT_OK


def cmd_cliques(args: argparse.Namespace, config: EngineConfig) -> int:
    cliques = maximal_cliques(_load(args).graph, limit=config.clique_limit)
    # undefined on the empty graph, as in clique_number
    omega = max((len(q) for q in cliques), default=None)
    gamma = min((len(q) for q in cliques), default=None)
    if args.json:
        _out(dump_report({"cliques": [sorted(q) for q in cliques], "omega": omega, "gamma": gamma}))
        return EXIT_OK
    for clique in cliques:
        _out(" ".join(str(v) for v in sorted(clique)))
    _out(f"omega: {'undefined' if omega is None else omega}")
    _out(f"gamma: {'undefined' if gamma is None else gamma}")
    return EXIT_OK


def cmd_ecc(args: argparse.Namespace, config: EngineConfig) -> int:
    cover = min_edge_clique_cover(
        _load(args).graph,
        node_budget=config.node_budget,
        clique_limit=config.clique_limit,
    )
    if args.json:
        _out(dump_report({"cover": [sorted(q) for q in cover.cliques], "theta_e": cover.size}))
        return EXIT_OK
    for clique in cover.cliques:
        _out(" ".join(str(v) for v in sorted(clique)))
    _out(f"theta_e: {cover.size}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: EngineConfig) -> int:
    checks = verify_laws(_load(args).graph, args.law or [Law.ALL.value], config)
    if args.json:
        _out(dump_report({
            "laws": [
                {"law": check.law.value, "passed": check.passed, "details": check.details}
                for check in checks
            ]
        }))
    else:
        for check in checks:
            _out(f"{check.law.value}: {'PASS' if check.passed else 'FAIL'}")
            for key, value in sorted(check.details.items()):
                _out(f"  {key}: {value}")
    enforce_laws(checks)
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace, config: EngineConfig) -> int:
    graph = _load(args).graph
    report = bounds_report(graph, DimensionEngine(graph, memoize=config.memoize))
    values = {**bounds_to_dict(report), "violations": report.violations()}
    if args.json:
        _out(dump_report(values))
    else:
        for key, value in sorted(values.items()):
            _out(f"{key}: {value}")
    if report.violations():
        raise LawViolationError(f"Bounds violated: {report.violations()}")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, config: EngineConfig) -> int:
    spec = GenSpec(family=GenFamily(args.family), params=parse_params(args.params), seed=args.seed)
    graph = build_graph(spec)
    fmt = GraphFormat(args.format)
    if args.out:
        path = write_document(graph, args.out, fmt)
        logger.info("Wrote {} (n={}, m={}) to {}", spec.family.value, graph.n, graph.edge_count, path)
    else:
        sys.stdout.write(serialize(graph, fmt))
    return EXIT_OK


def cmd_suite(args: argparse.Namespace, config: EngineConfig) -> int:
    suite_config = suite_config_for(
        args.profile,
        seed=args.seed,
        max_n=args.max_n,
        theorem4_samples=args.samples,
        corpus_path=args.corpus,
        workers=args.workers,
    )
    result = run_suite(suite_config, config)
    if args.json:
        _out(dump_report(build_suite_report(result, timings=args.timings)))
    else:
        for check in result.checks:
            _out(f"{'PASS' if check.passed else 'FAIL'} {check.name} ({check.instances} instances)")
            for failure in check.failures:
                _out(f"  {failure}")
    if not result.passed:
        raise LawViolationError(f"Suite checks failed: {', '.join(result.failed)}")
    return EXIT_OK


# =========================
# PARSER
# =========================
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphdim", description="Exact inductive graph dimension toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", default=None, help="Engine config name under configs/")
    parser.add_argument("--log-level", default=None, help="Console log level (default from config)")
    parser.add_argument("--log-dir", default=None, help="Also write rotating logs to this directory")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("file", help="Graph file, or - for stdin")
        cmd.add_argument("--format", choices=INPUT_FORMATS, default=None)
        cmd.add_argument("--json", action="store_true")
        cmd.set_defaults(handler=handler)
        return cmd

    dim_cmd = graph_command("dim", cmd_dim, "Exact dimension as p/q")
    dim_cmd.add_argument("--timings", action="store_true", help="Add timings_ms to the JSON report")
    graph_command("spectrum", cmd_spectrum, "Per-vertex dimensions")
    graph_command("cliques", cmd_cliques, "Maximal cliques, omega and gamma")
    ecc_cmd = graph_command("ecc", cmd_ecc, "Minimum edge clique cover")
    ecc_cmd.add_argument("--budget", type=int, default=None, help="Branch-and-bound node budget")
    verify_cmd = graph_command("verify", cmd_verify, "Check dimension laws exactly")
    verify_cmd.add_argument("--law", action="append", choices=[law.value for law in Law])
    graph_command("bounds", cmd_bounds, "Clique-number bounds on the dimension")

    gen = sub.add_parser("gen", help="Emit a generated graph")
    gen.add_argument("--family", required=True, choices=[family.value for family in GenFamily])
    gen.add_argument("--params", default="", help="e.g. k=4,n=12 or n=8,p=1/2")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None)
    gen.add_argument("--format", choices=[fmt.value for fmt in GraphFormat], default=GraphFormat.EDGE_LIST.value)
    gen.set_defaults(handler=cmd_gen)

    suite = sub.add_parser("suite", help="Run the acceptance property suite")
    suite.add_argument("--profile", choices=sorted(SUITE_PROFILES), default="acceptance")
    suite.add_argument("--max-n", type=int, default=None)
    suite.add_argument("--samples", type=int, default=None)
    suite.add_argument("--seed", type=int, default=None)
    suite.add_argument("--corpus", default=None, help="graph6 file for the cover-formula corpus")
    suite.add_argument("--workers", type=int, default=None)
    suite.add_argument("--json", action="store_true")
    suite.add_argument("--timings", action="store_true")
    suite.set_defaults(handler=cmd_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    """
    Application entrypoint.
    Responsibilities:
    - Load environment variables
    - Build the engine config
    - Setup logging
    - Dispatch the subcommand and map errors to exit codes
    """

    # =========================
    # ENV & ARGS
    # =========================
    load_dotenv(dotenv_path=Path.cwd() / ".env", override=True)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    # =========================
    # CONFIG & LOGGING
    # =========================
    try:
        config = (
            EngineConfigBuilder()
            .with_file(args.config or os.getenv("GRAPHDIM_CONFIG") or DEFAULT_CONFIG_NAME)
            .with_env()
            .with_overrides(node_budget=getattr(args, "budget", None))
            .build()
        )
    except GraphDimError as exc:
        setup_logging()
        logger.error("Invalid configuration: {}", exc)
        return EXIT_INPUT

    setup_logging(args.log_level or config.log_level, args.log_dir)

    # =========================
    # DISPATCH
    # =========================
    try:
        return args.handler(args, config)
    except LawViolationError as exc:
        logger.warning("{}", exc)
        return EXIT_LAW
    except ResourceLimitError as exc:
        logger.error("Resource limit: {}", exc)
        return EXIT_RESOURCE
    except GraphDimError as exc:
        logger.error("{}", exc)
        return EXIT_INPUT
    except OSError as exc:
        logger.error("Cannot read input: {}", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())

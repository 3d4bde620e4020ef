#!/usr/bin/env python3
import argparse
from fractions import Fraction

from graphdim.analysis.cover_formula import bounds_report
from graphdim.analysis.dimension import dim_spectrum
from graphdim.core.graph import Graph
from graphdim.core.rational import format_rational
from graphdim.generators.families import (
    clique_plus_isolated,
    double_clique_matching,
    inflated_cube,
    star_clique,
    windmill,
)


def _print_graph(name: str, graph: Graph) -> None:
    report = dim_spectrum(graph)
    values = sorted(set(report.vertex_dims))
    print(f"{name}")
    print(f"- n: {graph.n}, m: {graph.edge_count}")
    print(f"- dim: {format_rational(report.graph_dim)}")
    print(f"- vertex dims: {', '.join(format_rational(v) for v in values)}")
    print(f"- omega/gamma: {report.omega}/{report.gamma}")
    print(f"- uniform: {report.is_uniform}, pure: {report.is_pure}")


def _print_bounds(name: str, graph: Graph) -> None:
    report = bounds_report(graph)
    lower = report.lower_connected if report.lower_connected is not None else Fraction(0)
    print(f"{name}")
    print(f"- dim: {format_rational(report.dim)}")
    print(f"- k(k-1)/n: {format_rational(report.lower_basic)} (saturated: {report.saturated_lower})")
    print(f"- connected bound: {format_rational(lower)} (saturated: {report.saturated_connected})")
    print(f"- k-1: {format_rational(report.upper)} (saturated: {report.saturated_upper})")


def main() -> int:
    parser = argparse.ArgumentParser(
        description="Print dimensions of the reference constructions."
    )
    parser.add_argument("--k", type=int, default=4, help="Core clique order for star_clique.")
    parser.add_argument("--n", type=int, default=12, help="Total order for star_clique.")
    parser.add_argument("--windmill", type=int, default=3, help="Triangle count for windmill.")
    args = parser.parse_args()

    _print_graph("double_clique_matching(4)", double_clique_matching(4))
    print("")
    _print_graph("inflated_cube()", inflated_cube())
    print("")
    _print_graph(f"windmill({args.windmill})", windmill(args.windmill))
    print("")
    _print_bounds(f"star_clique({args.k}, {args.n})", star_clique(args.k, args.n))
    print("")
    _print_bounds("K_4 plus 4 isolated vertices", clique_plus_isolated(4, 4))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

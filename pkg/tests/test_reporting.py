import json

from graphdim.core.graph import edgeless
from graphdim.core.types import GraphFormat
from graphdim.providers.document import GraphDocument
from graphdim.reporting.analysis_reporter import (
    build_analysis_report,
    build_suite_report,
    dump_report,
)
from graphdim.service.suite import CheckResult, SuiteResult


def _document(graph, label="sample"):
    return GraphDocument(source="sample.edges", format=GraphFormat.EDGE_LIST, graph=graph, label=label)


def test_report_fields(k4_with_pendant):
    report = build_analysis_report(_document(k4_with_pendant))

    assert report["graph"] == {"n": 5, "m": 7, "components": 1}
    assert report["dim"] == {"exact": "5/2", "decimal": "2.5"}
    assert report["vertex_dims"] == ["3", "3", "3", "5/2", "1"]
    assert (report["omega"], report["gamma"], report["theta_e"]) == (4, 2, 2)
    assert report["is_pure"] is False
    assert report["is_uniform"] is False
    assert report["cover"] == [[0, 1, 2, 3], [3, 4]]
    assert report["theorem4"] == {"lhs": "10", "rhs": "10", "equal": True}
    assert report["bounds"]["upper"] == "3"
    assert "timings_ms" not in report


def test_timings_are_opt_in(double_k4):
    report = build_analysis_report(_document(double_k4), timings=True)

    assert set(report["timings_ms"]) == {"dim", "cliques", "ecc", "theorem4", "bounds"}
    assert all(value >= 0 for value in report["timings_ms"].values())


def test_report_is_byte_deterministic(star_k4_n12):
    first = dump_report(build_analysis_report(_document(star_k4_n12)))
    second = dump_report(build_analysis_report(_document(star_k4_n12)))

    assert first == second
    parsed = json.loads(first)
    assert list(parsed) == sorted(parsed)
    assert parsed["bounds"]["lower_connected"] == "7/5"


def test_empty_graph_report():
    report = build_analysis_report(_document(edgeless(0), label=None))

    assert report["dim"]["exact"] == "-1"
    assert report["omega"] is None
    assert report["theorem4"] is None
    assert report["bounds"] is None
    assert report["theta_e"] == 0
    assert report["label"] is None


def test_suite_report():
    result = SuiteResult(
        profile="quick",
        seed=3,
        checks=(
            CheckResult(name="join_law", passed=True, instances=10, elapsed_ms=1.5),
            CheckResult(name="bounds", passed=False, instances=4, failures=("n=3 ...",), elapsed_ms=2.0),
        ),
    )
    report = build_suite_report(result)

    assert report["passed"] is False
    assert report["checks"][1]["failures"] == ["n=3 ..."]
    assert "elapsed_ms" not in report["checks"][0]
    assert build_suite_report(result, timings=True)["checks"][0]["elapsed_ms"] == 1.5

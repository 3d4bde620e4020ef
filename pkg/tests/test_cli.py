import json

import pytest

from graphdim import cli
from graphdim.core.types import Law, LawCheck
from graphdim.generators.families import complete_multipartite, star_clique
from graphdim.providers.edge_list import serialize_edge_list
from graphdim.service import suite
from graphdim.service.suite import CheckResult, SuiteResult

PENDANT_CLIQUE = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n"


@pytest.fixture(autouse=True)
def _isolated_cwd(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    for var in ("GRAPHDIM_BUDGET", "GRAPHDIM_CLIQUE_LIMIT", "GRAPHDIM_WORKERS", "GRAPHDIM_LOG_DIR", "GRAPHDIM_CONFIG"):
        monkeypatch.delenv(var, raising=False)


@pytest.fixture
def pendant_file(tmp_path):
    path = tmp_path / "pendant.edges"
    path.write_text(PENDANT_CLIQUE, encoding="utf-8")
    return str(path)


@pytest.fixture
def star_file(tmp_path):
    path = tmp_path / "star.edges"
    path.write_text(serialize_edge_list(star_clique(4, 12)), encoding="utf-8")
    return str(path)


@pytest.fixture
def cocktail_file(tmp_path):
    # every edge lies in four K4s, so the cover search has to branch
    path = tmp_path / "cocktail.edges"
    path.write_text(serialize_edge_list(complete_multipartite([2, 2, 2, 2])), encoding="utf-8")
    return str(path)


def test_dim_prints_exact_value(pendant_file, capsys):
    assert cli.main(["dim", pendant_file]) == 0
    assert capsys.readouterr().out == "5/2\n"


def test_dim_of_complete_graph(tmp_path, capsys):
    path = tmp_path / "k5.g6"
    path.write_text("D~{\n", encoding="utf-8")

    assert cli.main(["dim", str(path)]) == 0
    assert capsys.readouterr().out == "4\n"


def test_dim_json(pendant_file, capsys):
    assert cli.main(["dim", pendant_file, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)

    assert report["dim"]["exact"] == "5/2"
    assert report["label"] == "pendant"
    assert "timings_ms" not in report


def test_spectrum(pendant_file, capsys):
    assert cli.main(["spectrum", pendant_file]) == 0
    out = capsys.readouterr().out.splitlines()

    assert out[3] == "3: 5/2"
    assert "uniform: false" in out
    assert "pure: false" in out


def test_cliques_and_ecc(pendant_file, capsys):
    assert cli.main(["cliques", pendant_file]) == 0
    assert capsys.readouterr().out == "0 1 2 3\n3 4\nomega: 4\ngamma: 2\n"

    assert cli.main(["ecc", pendant_file]) == 0
    assert capsys.readouterr().out == "0 1 2 3\n3 4\ntheta_e: 2\n"


def test_cliques_of_the_empty_graph_are_undefined(tmp_path, capsys):
    empty = tmp_path / "empty.edges"
    empty.write_text("n 0\n", encoding="utf-8")

    assert cli.main(["cliques", str(empty)]) == 0
    assert capsys.readouterr().out == "omega: undefined\ngamma: undefined\n"

    assert cli.main(["cliques", str(empty), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report == {"cliques": [], "gamma": None, "omega": None}


def test_verify_bounds_reports_saturation(star_file, capsys):
    assert cli.main(["verify", star_file, "--law", "bounds"]) == 0
    out = capsys.readouterr().out

    assert "bounds: PASS" in out
    assert "lower_connected: 7/5" in out
    assert "saturated_connected: True" in out


def test_verify_all_laws(pendant_file, capsys):
    assert cli.main(["verify", pendant_file, "--json"]) == 0
    laws = json.loads(capsys.readouterr().out)["laws"]
    assert [entry["law"] for entry in laws] == ["join", "union", "theorem4", "ball", "bounds"]


def test_law_violation_exit_code(pendant_file, monkeypatch):
    monkeypatch.setattr(
        cli,
        "verify_laws",
        lambda graph, laws, config: [LawCheck(law=Law.JOIN, passed=False)],
    )
    assert cli.main(["verify", pendant_file]) == 4


def test_bounds_command(star_file, capsys):
    assert cli.main(["bounds", star_file, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["lower_connected"] == "7/5"


def test_gen_to_stdout(capsys):
    assert cli.main(["gen", "--family", "star_clique", "--params", "k=4,n=12"]) == 0
    out = capsys.readouterr().out

    assert out.startswith("n 12\n")
    assert out == serialize_edge_list(star_clique(4, 12))


def test_gen_formats(tmp_path, capsys):
    assert cli.main(["gen", "--family", "complete", "--params", "n=3", "--format", "graph6"]) == 0
    assert capsys.readouterr().out == "Bw\n"

    assert cli.main(["gen", "--family", "complete", "--params", "n=2", "--format", "dot"]) == 0
    assert "0 -- 1;" in capsys.readouterr().out

    target = tmp_path / "er.edges"
    args = ["gen", "--family", "erdos_renyi", "--params", "n=8,p=1/2", "--seed", "42", "--out", str(target)]
    assert cli.main(args) == 0
    assert target.read_text(encoding="utf-8").startswith("n 8\n")


def test_parse_error_exit_code(tmp_path):
    path = tmp_path / "loop.edges"
    path.write_text("0 0\n", encoding="utf-8")
    assert cli.main(["dim", str(path)]) == 1


def test_missing_file_exit_code(tmp_path):
    assert cli.main(["dim", str(tmp_path / "absent.edges")]) == 1


def test_bad_generator_params_exit_code():
    assert cli.main(["gen", "--family", "cycle", "--params", "n=2"]) == 1


def test_usage_errors_exit_two():
    assert cli.main(["bogus"]) == 2
    assert cli.main(["dim"]) == 2
    assert cli.main(["dim", "x.edges", "--nope"]) == 2


def test_resource_limit_exit_code(cocktail_file):
    assert cli.main(["ecc", cocktail_file, "--budget", "1"]) == 3


def test_budget_from_environment(cocktail_file, monkeypatch):
    monkeypatch.setenv("GRAPHDIM_BUDGET", "1")
    assert cli.main(["ecc", cocktail_file]) == 3


def test_invalid_config_exit_code(monkeypatch):
    monkeypatch.setenv("GRAPHDIM_WORKERS", "0")
    assert cli.main(["gen", "--family", "petersen"]) == 1


def test_suite_json(monkeypatch, capsys):
    monkeypatch.setattr(
        cli,
        "run_suite",
        lambda config, engine_config: suite.run_suite(config, engine_config, only=["join_law", "bounds"]),
    )
    assert cli.main(["suite", "--profile", "quick", "--samples", "5", "--json"]) == 0
    summary = json.loads(capsys.readouterr().out)

    assert summary["profile"] == "quick"
    assert summary["passed"] is True
    assert [check["name"] for check in summary["checks"]] == ["join_law", "bounds"]
    assert all("elapsed_ms" not in check for check in summary["checks"])


def test_suite_failure_exit_code(monkeypatch):
    monkeypatch.setattr(
        cli,
        "run_suite",
        lambda config, engine_config: SuiteResult(
            profile=config.profile,
            seed=config.seed,
            checks=(CheckResult(name="bounds", passed=False, instances=1, failures=("x",)),),
        ),
    )
    assert cli.main(["suite", "--profile", "quick"]) == 4

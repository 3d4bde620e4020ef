import json
from dataclasses import replace
from pathlib import Path

import pytest

from graphdim.service.profiles import suite_config_for
from graphdim.service.suite import CHECKS, REGRESSION_KEY, REGRESSION_VALUE, run_suite
from graphdim.state.regression_state import load_regression, load_regressions, save_regression
from graphdim.utils.engine_config import EngineConfig


def _tiny(**overrides):
    config = suite_config_for("quick")
    small = dict(
        random_trees=3,
        join_pairs=4,
        join_triples=2,
        union_graphs=4,
        theorem4_samples=6,
        pure_graphs=3,
        ecc_instances=6,
        oracle_graphs=6,
        relabelings=1,
        clique_graphs=6,
        perf_n=10,
    )
    small.update(overrides)
    return replace(config, **small)


def test_every_check_passes_on_a_tiny_run(state_dir):
    result = run_suite(_tiny())

    assert [check.name for check in result.checks] == [name for name, _ in CHECKS]
    assert result.passed, result.failed
    assert all(check.instances > 0 for check in result.checks)


def test_selected_checks_only(state_dir):
    result = run_suite(_tiny(), EngineConfig(), only=["join_law", "bounds"])
    assert [check.name for check in result.checks] == ["join_law", "bounds"]


def test_parallel_run_matches_sequential(state_dir):
    names = ["base_values", "union_law", "ecc_optimality", "clique_enumeration"]
    sequential = run_suite(_tiny(), only=names)
    parallel = run_suite(_tiny(workers=3), only=names)

    assert [(c.name, c.passed, c.instances) for c in parallel.checks] == [
        (c.name, c.passed, c.instances) for c in sequential.checks
    ]


def test_regression_is_pinned_then_compared(state_dir):
    first = run_suite(_tiny(), only=["regression"])
    pinned = load_regression(REGRESSION_KEY)

    assert first.passed
    assert pinned == REGRESSION_VALUE == "145/96"
    assert (state_dir / "regressions.json").exists()
    assert run_suite(_tiny(), only=["regression"]).passed

    save_regression(REGRESSION_KEY, "0")
    tampered = run_suite(_tiny(), only=["regression"])
    assert not tampered.passed
    assert tampered.failed == ["regression"]
    assert "pinned 0" in tampered.checks[0].failures[0]


def test_regression_store_layout(state_dir):
    save_regression("example", "5/2")
    data = json.loads((state_dir / "regressions.json").read_text(encoding="utf-8"))

    assert data["example"]["value"] == "5/2"
    assert data["example"]["recorded_at"].endswith("Z")
    assert load_regressions()["example"]["value"] == "5/2"


def test_corpus_file_feeds_cover_formula(tmp_path, state_dir):
    corpus = tmp_path / "connected.g6"
    # K_2, K_3, P_3, a disconnected graph on 3 vertices and a single vertex
    corpus.write_text("A_\nBw\nBo\nBO\n@\n", encoding="utf-8")

    result = run_suite(_tiny(corpus_path=str(corpus)), only=["theorem4"])
    assert result.passed
    assert result.checks[0].instances >= 3


def test_suite_is_deterministic(state_dir):
    names = ["join_law", "theorem4", "oracle_equivalence"]
    first = run_suite(_tiny(seed=5), only=names)
    second = run_suite(_tiny(seed=5), only=names)

    assert [c.instances for c in first.checks] == [c.instances for c in second.checks]


@pytest.mark.slow
def test_quick_profile(state_dir):
    assert run_suite(suite_config_for("quick")).passed


@pytest.mark.slow
def test_acceptance_profile(state_dir):
    assert run_suite(suite_config_for("acceptance")).passed


def test_shipped_state_pins_the_regression_value():
    shipped = Path(__file__).resolve().parents[1] / "state" / "regressions.json"
    data = json.loads(shipped.read_text(encoding="utf-8"))

    assert data[REGRESSION_KEY]["value"] == REGRESSION_VALUE


def test_ball_identity_covers_every_law_corpus(state_dir):
    config = _tiny()
    result = run_suite(config, only=["ball_identity"])
    # base values: empty, 10 edgeless, 8 complete, 10 cycles, plus the random trees
    base = 1 + 10 + 8 + 10 + config.random_trees

    assert result.passed
    assert result.checks[0].instances == (
        base + config.join_pairs + config.join_triples + config.union_graphs
    )

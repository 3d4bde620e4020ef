import pytest
from loguru import logger

from graphdim.config import engine_config_store
from graphdim.core.graph import Graph, complete, from_edges
from graphdim.generators.families import double_clique_matching, star_clique
from graphdim.state import regression_state


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def k4_with_pendant() -> Graph:
    """K_4 on 0..3 plus the edge 3-4; dimension 5/2."""
    return from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])


@pytest.fixture
def edge_plus_isolated() -> Graph:
    return from_edges(3, [(0, 1)])


@pytest.fixture
def double_k4() -> Graph:
    return double_clique_matching(4)


@pytest.fixture
def star_k4_n12() -> Graph:
    return star_clique(4, 12)


@pytest.fixture
def state_dir(tmp_path, monkeypatch):
    path = tmp_path / "state"
    monkeypatch.setattr(regression_state, "STATE_DIR", path)
    return path


@pytest.fixture
def config_dir(tmp_path, monkeypatch):
    path = tmp_path / "configs"
    monkeypatch.setattr(engine_config_store, "CONFIG_DIR", path)
    return path


@pytest.fixture(autouse=True)
def _reset_logging():
    yield
    logger.remove()
    logger.add(lambda _: None, level="WARNING")

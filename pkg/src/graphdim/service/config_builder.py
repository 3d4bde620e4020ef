# src/service/config_builder.py
import os
from dataclasses import asdict, fields

from graphdim.config.engine_config_store import DEFAULT_CONFIG_NAME, load_config
from graphdim.errors import GraphValidationError
from graphdim.utils.engine_config import EngineConfig

ENV_OVERRIDES = {
    "GRAPHDIM_BUDGET": "node_budget",
    "GRAPHDIM_CLIQUE_LIMIT": "clique_limit",
    "GRAPHDIM_WORKERS": "workers",
}


class EngineConfigBuilder:
    def __init__(self):
        self._config: dict = asdict(EngineConfig())

    def with_file(self, name: str = DEFAULT_CONFIG_NAME):
        stored = load_config(name)
        if stored is not None:
            self._config.update(asdict(stored))
        return self

    def with_env(self):
        for var, key in ENV_OVERRIDES.items():
            raw = os.getenv(var)
            if raw is None or not raw.strip():
                continue
            try:
                self._config[key] = int(raw)
            except ValueError as exc:
                raise GraphValidationError(f"{var} must be an integer, got {raw!r}") from exc
        return self

    def with_overrides(self, **overrides):
        known = {f.name for f in fields(EngineConfig)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise GraphValidationError(f"Unknown EngineConfig fields: {unknown}")
        self._config.update({k: v for k, v in overrides.items() if v is not None})
        return self

    def build(self) -> EngineConfig:
        for key in ("node_budget", "clique_limit", "pure_glued_attempts", "workers"):
            if self._config[key] < 1:
                raise GraphValidationError(f"{key} must be positive, got {self._config[key]}")
        return EngineConfig(**self._config)

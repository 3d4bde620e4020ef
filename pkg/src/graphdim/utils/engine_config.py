# utils/engine_config.py
from dataclasses import dataclass


@dataclass(frozen=True)
class EngineConfig:
    # Search limits
    node_budget: int = 10_000_000
    clique_limit: int = 1_000_000
    pure_glued_attempts: int = 1000

    # Dimension engine
    memoize: bool = True
    workers: int = 1

    # Logging
    log_level: str = "WARNING"

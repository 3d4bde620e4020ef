import json
from dataclasses import asdict
from pathlib import Path
from typing import Optional

from graphdim.errors import GraphValidationError
from graphdim.utils.engine_config import EngineConfig

CONFIG_DIR = Path("configs")
DEFAULT_CONFIG_NAME = "default"


def _ensure_config_dir() -> None:
    CONFIG_DIR.mkdir(parents=True, exist_ok=True)


def config_path(name: str = DEFAULT_CONFIG_NAME) -> Path:
    return CONFIG_DIR / f"{name}.json"


def save_config(config: EngineConfig, name: str = DEFAULT_CONFIG_NAME) -> Path:
    _ensure_config_dir()
    path = config_path(name)
    with path.open("w", encoding="utf-8") as f:
        json.dump(asdict(config), f, indent=2, sort_keys=True)
    return path


def load_config(name: str = DEFAULT_CONFIG_NAME) -> Optional[EngineConfig]:
    path = config_path(name)
    if not path.exists():
        return None
    with path.open(encoding="utf-8") as f:
        data = json.load(f)

    defaults = asdict(EngineConfig())
    for key, value in defaults.items():
        data.setdefault(key, value)

    unknown = sorted(set(data) - set(defaults))
    if unknown:
        raise GraphValidationError(f"Unknown keys in {path}: {unknown}")

    return EngineConfig(**data)

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

STATE_DIR = Path("state")
REGRESSION_FILE = "regressions.json"


def _ensure_state_dir() -> None:
    STATE_DIR.mkdir(parents=True, exist_ok=True)


def regression_path() -> Path:
    return STATE_DIR / REGRESSION_FILE


def load_regressions() -> dict[str, dict]:
    path = regression_path()
    if not path.exists():
        return {}
    with path.open(encoding="utf-8") as f:
        return json.load(f)


def load_regression(key: str) -> Optional[str]:
    entry = load_regressions().get(key)
    return None if entry is None else entry["value"]


def save_regression(key: str, value: str) -> None:
    _ensure_state_dir()
    data = load_regressions()
    data[key] = {
        "value": value,
        "recorded_at": datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
    }
    with regression_path().open("w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, sort_keys=True)


def clear_regressions() -> None:
    path = regression_path()
    if path.exists():
        path.unlink()

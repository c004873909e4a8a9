"""
Configuration Management

Loads config from:
1. config.yaml (defaults for the command line)
2. .env (ZZT_THREADS, ZZT_DEBUG)
"""

import os
from functools import lru_cache
from pathlib import Path
from typing import Any

import yaml
from dotenv import load_dotenv

load_dotenv()


def get_project_root() -> Path:
    """Get project root directory."""
    return Path(__file__).parent.parent


def load_config(config_path: str | None = None) -> dict[str, Any]:
    """Load configuration from YAML file."""
    if config_path is None:
        config_path = get_project_root() / "config.yaml"

    config_path = Path(config_path)

    if not config_path.exists():
        return get_default_config()

    with open(config_path, "r") as f:
        config = yaml.safe_load(f) or {}

    defaults = get_default_config()
    merged = {**defaults, **config}
    merged["verify"] = {**defaults["verify"], **(config.get("verify") or {})}
    return merged


def get_default_config() -> dict[str, Any]:
    """Default configuration."""
    return {
        # Algebra rank and grading mode
        "n": 2,
        "mode": "tilde",  # path | tilde | vec | custom

        # Bound on reflection word length for Bessis enumerations
        "bound": 3,

        # Seed for every randomized sample
        "seed": 0,

        # Output format
        "format": "text",  # text | json

        # Workers for verification sweeps
        "threads": get_thread_limit(),

        # Acceptance suites
        "verify": {
            "maxlen": 4,
            "samples": 50,
            "conjugator_length": 2,
            "braid_depth": 3,
        },

        # Logging
        "log_level": "INFO",
        "log_file": None,
    }


def get_thread_limit() -> int:
    """Worker cap from ZZT_THREADS (default 1)."""
    raw = os.getenv("ZZT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"ZZT_THREADS must be an integer, got {raw!r}")


@lru_cache(maxsize=1)
def debug_checks() -> bool:
    """Whether every produced complex is re-validated (ZZT_DEBUG)."""
    return os.getenv("ZZT_DEBUG", "").lower() not in ("", "0", "false", "no")

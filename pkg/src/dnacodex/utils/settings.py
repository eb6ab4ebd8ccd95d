import os
import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

CONFIG_DIR = Path(__file__).resolve().parent.parent / "codes" / "config"

DEFAULT_BUDGET = 24
MIN_BUDGET = 1
MAX_BUDGET = 30


def default_threads() -> int:
    return os.cpu_count() or 1


@lru_cache(maxsize=None)
def load_yaml_config(name: str) -> Dict[str, Any]:
    """Load one of the static YAML tables shipped in codes/config.

    The result is cached and shared; callers must treat it as read-only.
    """
    path = CONFIG_DIR / name
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def _read_int(var: str) -> Optional[int]:
    raw = os.getenv(var)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring {var}={raw!r}: not an integer")
        return None


def read_environment_overrides() -> Dict[str, int]:
    """Collect budget/thread overrides from the environment or a .env file"""
    load_dotenv()

    overrides: Dict[str, int] = {}

    budget = _read_int("DNACODEX_BUDGET")
    if budget is not None:
        if MIN_BUDGET <= budget <= MAX_BUDGET:
            overrides["budget"] = budget
        else:
            logger.warning(
                f"Ignoring DNACODEX_BUDGET={budget}: must lie in [{MIN_BUDGET}, {MAX_BUDGET}]"
            )

    threads = _read_int("DNACODEX_THREADS")
    if threads is not None:
        if threads >= 1:
            overrides["threads"] = threads
        else:
            logger.warning(f"Ignoring DNACODEX_THREADS={threads}: must be at least 1")

    return overrides


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    logger.info(f"Environment overrides: {read_environment_overrides()}")

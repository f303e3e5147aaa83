import os
import logging
from typing import Optional

from dotenv import load_dotenv

from .errors import ConfigurationError

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_THREADS = 4
DEFAULT_LOG_LEVEL = "INFO"

_TRUTHY = {"1", "true", "yes", "on"}


def worker_count(override: Optional[int] = None) -> int:
    """
    Number of worker threads for batch mode and sharded sweeps.

    Args:
        override: Value from a command-line flag; wins over BOTTFORGE_THREADS

    Returns:
        A positive worker count
    """
    if override is not None:
        if override < 1:
            raise ConfigurationError(f"thread count must be positive, got {override}")
        return override

    raw = os.getenv("BOTTFORGE_THREADS")
    if raw is None or not raw.strip():
        return DEFAULT_THREADS
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"BOTTFORGE_THREADS must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigurationError(f"BOTTFORGE_THREADS must be positive, got {value}")
    return value


def checked_mode() -> bool:
    return os.getenv("BOTTFORGE_CHECKED", "").strip().lower() in _TRUTHY


def log_level() -> int:
    name = os.getenv("BOTTFORGE_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ConfigurationError(f"unknown BOTTFORGE_LOG_LEVEL {name!r}")
    return level

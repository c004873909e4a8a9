"""
Logging Setup

Uses loguru. Everything is written to stderr so that complexes, tables and
reports printed on stdout stay byte-stable between runs.
"""

import sys
from pathlib import Path

from loguru import logger

_initialized = False

_TEXT_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{extra[component]}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
)


def setup_logger(level: str = "INFO", log_file: str | None = None, structured: bool = False) -> None:
    """
    Setup logging configuration.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR)
        log_file: Optional log file path
        structured: Emit JSON records instead of coloured text (used with --format json)
    """
    global _initialized
    if _initialized:
        return

    logger.remove()
    logger.configure(extra={"component": "zigzagtwist"})

    if structured:
        logger.add(sys.stderr, level=level, serialize=True)
    else:
        logger.add(sys.stderr, level=level, format=_TEXT_FORMAT, colorize=True)

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        logger.add(
            log_file,
            level=level,
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[component]}:{function}:{line} - {message}",
            rotation="10 MB",
            retention="7 days",
        )

    _initialized = True


def get_logger(component: str = "zigzagtwist"):
    """Get a logger bound to a component name (algebra, twists, bessis, ...)."""
    return logger.bind(component=component)

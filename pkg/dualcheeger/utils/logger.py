"""
Logging utilities for the dualcheeger library.

The package logs to stderr so that reports on stdout stay machine readable.
"""
import logging
import os
import sys
import time
from contextlib import contextmanager
from typing import Dict, Iterator, Optional, Union

from dualcheeger.exceptions import ConfigError

DEFAULT_LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_LEVEL_ENV = 'DUALCHEEGER_LOG_LEVEL'

def resolve_level(level: Union[int, str, None]) -> int:
    """
    Turn a level name or number into a logging level.

    None reads DUALCHEEGER_LOG_LEVEL and falls back to WARNING.

    Raises:
        ConfigError: If a name is not a logging level
    """
    if level is None:
        level = os.environ.get(LOG_LEVEL_ENV, 'WARNING')
    if isinstance(level, int):
        return level
    value = logging.getLevelName(level.strip().upper())
    if not isinstance(value, int):
        raise ConfigError(f"Unknown log level {level!r}")
    return value

def setup_logger(name: str, level: Union[int, str, None] = None, log_file: Optional[str] = None,
                 format_str: Optional[str] = None) -> logging.Logger:
    """
    Configure and return a logger instance.

    Args:
        name: Logger name
        level: Level name or number (default: from DUALCHEEGER_LOG_LEVEL or WARNING)
        log_file: Extra file to write logs to
        format_str: Logging format string

    Returns:
        Logger instance
    """
    logger = logging.getLogger(name)
    try:
        logger.setLevel(resolve_level(level))
    except ConfigError:
        logger.setLevel(logging.WARNING)

    for handler in logger.handlers[:]:
        logger.removeHandler(handler)

    formatter = logging.Formatter(format_str or DEFAULT_LOG_FORMAT)
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger

@contextmanager
def stage_timer(timings: Dict[str, float], stage: str) -> Iterator[None]:
    """Record the wall time of a block under ``timings[stage]`` and log it at DEBUG."""
    started = time.perf_counter()
    try:
        yield
    finally:
        timings[stage] = time.perf_counter() - started
        logger.debug(f"{stage} took {timings[stage]:.6f}s")

logger = setup_logger('dualcheeger')

"""
Centralized logging configuration for the engine.

- Standard format, written to stderr so command results keep stdout
- Level accepted as a logging constant or a name ("info", "DEBUG", ...)
- Only entry points (cli, run_corpus.py) call configure_logging
"""

import logging
import sys

LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"


def configure_logging(level: int | str = logging.INFO) -> None:
    if isinstance(level, str):
        level = level.upper()
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    # basicConfig is a no-op once handlers exist; a later call still sets the level
    logging.getLogger().setLevel(level)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)

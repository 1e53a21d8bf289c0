"""
Logging Configuration for the Flat Manifold Service

Log lines go to stderr; stdout carries the machine-readable reports.
"""

import logging
import os
import sys
from typing import Optional

from pythonjsonlogger.json import JsonFormatter

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logger(
    name: str,
    level: Optional[str] = None,
    json_format: Optional[bool] = None,
    format_string: Optional[str] = None
) -> logging.Logger:
    """
    Set up a logger with consistent formatting.

    Args:
        name: Logger name (usually __name__, or "flat_manifold_utils" for the library)
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        json_format: Emit JSON lines instead of plain text
        format_string: Custom format string for plain text output

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)

    # Set level from environment or default
    if level is None:
        level = os.getenv("FLATMAN_LOG_LEVEL", os.getenv("LOG_LEVEL", "INFO"))
    if json_format is None:
        json_format = os.getenv("FLATMAN_LOG_JSON", "").lower() in ("1", "true", "yes")

    logger.setLevel(getattr(logging, level.upper()))

    # Avoid duplicate handlers; a second call only updates the level
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(getattr(logging, level.upper()))
        return logger

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(getattr(logging, level.upper()))

    if format_string is None:
        format_string = DEFAULT_FORMAT

    if json_format:
        formatter = JsonFormatter(
            "%(asctime)s %(name)s %(levelname)s %(message)s",
            rename_fields={"levelname": "level", "asctime": "time"},
        )
    else:
        formatter = logging.Formatter(format_string)
    handler.setFormatter(formatter)

    logger.addHandler(handler)

    return logger

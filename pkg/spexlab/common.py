#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Built-in modules
import logging
import math
from typing import Any

# Third-party modules
from rich.console import Console
from rich.logging import RichHandler

# Internal modules
from spexlab.paths import get_log_level

# Everything human-readable goes to stderr, stdout is kept for artifacts
console = Console(stderr=True)


###############################################################################
def setup_logging(level: str | None = None) -> logging.Logger:
    """Attach a single rich handler to the package logger."""
    logger = logging.getLogger("spexlab")
    logger.setLevel(level or get_log_level())
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=console, show_path=False, rich_tracebacks=True)
        logger.addHandler(handler)
    logger.propagate = False
    return logger


###############################################################################
def format_cell(value: Any, decimals: int = 9) -> str:
    """
    Format one value for a text or CSV report cell.

    - None / NaN -> "-"
    - Booleans are spelled out
    - Integers show no decimal part
    - Floats are shown with up to `decimals` decimal places (trimmed)

    >>> format_cell(2.0000000004)
    '2'
    >>> format_cell(None)
    '-'
    """

    if value is None:
        return "-"

    if isinstance(value, bool):
        return "true" if value else "false"

    if isinstance(value, int):
        return str(value)

    if isinstance(value, float):
        if math.isnan(value):
            return "-"
        if math.isinf(value):
            return str(value)
        out = f"{value:.{decimals}f}"
        if decimals > 0:
            out = out.rstrip("0").rstrip(".")
        return out

    # Fallback: try numeric conversion, numpy scalars end up here
    try:
        return format_cell(float(value), decimals=decimals)
    except (TypeError, ValueError):
        return str(value)

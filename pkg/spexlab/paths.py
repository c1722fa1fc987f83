#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Built-in modules
import os
from functools import lru_cache
from pathlib import Path

# Internal modules
from spexlab.errors import InvalidParameters


###############################################################################
@lru_cache
def get_output_dir() -> Path:
    if v := os.environ.get("SPEXLAB_OUTPUT_DIR"):
        path = Path(v)
    else:
        path = Path(__file__).resolve().parents[1] / "output"
    path.mkdir(parents=True, exist_ok=True)
    return path


###############################################################################
@lru_cache
def get_checkpoint_dir() -> Path:
    path = get_output_dir() / "checkpoints"
    path.mkdir(parents=True, exist_ok=True)
    return path


###############################################################################
@lru_cache
def get_workers() -> int:
    """Worker count for process pools. Results never depend on it."""
    if v := os.environ.get("SPEXLAB_WORKERS"):
        try:
            workers = int(v)
        except ValueError:
            raise InvalidParameters(f"SPEXLAB_WORKERS must be an integer, got {v!r}")
        if workers < 1:
            raise InvalidParameters(f"SPEXLAB_WORKERS must be positive, got {workers}")
        return workers
    return os.cpu_count() or 1


###############################################################################
def get_log_level() -> str:
    return os.environ.get("SPEXLAB_LOG_LEVEL", "WARNING").upper()

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""config.py

Runtime knobs and constants.

ENV:
    YOUNGLATTICE_LOG_LEVEL  -> DEBUG / INFO / WARNING (default WARNING)
    YOUNGLATTICE_SUMMARY    -> 1/0 (default 1). Summary block on stderr at the end of a CLI run.

Results never depend on the environment: only flags change what is computed.
"""

from __future__ import annotations

import logging
import os
import sys
from typing import Optional


def env_str(name: str, default: str) -> str:
    v = os.getenv(name)
    if v is None or not v.strip():
        return default
    return v.strip()


def env_bool(name: str, default: bool = False) -> bool:
    v = os.getenv(name)
    if v is None:
        return default
    return str(v).strip().lower() in {"1", "true", "yes", "y", "on"}


# ------------------------------- Config ------------------------------------

LOG_LEVEL = env_str("YOUNGLATTICE_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
PRINT_SUMMARY = env_bool("YOUNGLATTICE_SUMMARY", default=True)

# Rendering
ASCII_MIN_CELL = 2
ASCII_BASE_CHAR = "#"
SVG_CELL = 24
SVG_BASE_FILL = "#c0c0c0"
SVG_EMPTY_FILL = "#ffffff"
SVG_GAP = 24
PNG_CELL = 24
PNG_GAP = 24

# Exploratory greedy runs beyond this many rows are reported, never asserted
GREEDY_ASSERTED_MAX_M = 4


def setup_logging(level: Optional[str] = None) -> None:
    """Single stderr handler; safe to call more than once."""
    name = (level or LOG_LEVEL).upper()
    numeric = getattr(logging, name, logging.WARNING)
    root = logging.getLogger()
    root.setLevel(numeric)
    for h in root.handlers:
        if getattr(h, "_younglattice", False):
            h.setLevel(numeric)
            return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler.setLevel(numeric)
    handler._younglattice = True  # type: ignore[attr-defined]
    root.addHandler(handler)

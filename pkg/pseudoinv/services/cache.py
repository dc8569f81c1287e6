"""SQLite-backed cache for computed B-sequences."""

from __future__ import annotations

import logging
import sqlite3
from fractions import Fraction
from typing import Callable

from pseudoinv.config.manager import config_manager
from pseudoinv.core.pseudo import BSequence
from pseudoinv.db import models

logger = logging.getLogger(__name__)


def _enabled() -> bool:
    return bool(config_manager.get("cache", "enabled", False))


def get_bsequence(spec_key: str, method: str, N: int, compute: Callable[[], BSequence]) -> BSequence:
    """Return the cached B-sequence for ``(spec_key, method, N)`` or compute and store it."""
    if not _enabled():
        return compute()
    try:
        models.initialize_schema()
        cached = models.get_bsequence_entry(spec_key, method, N)
    except sqlite3.Error as exc:
        logger.warning("cache unavailable: %s", exc)
        return compute()
    if cached is not None:
        logger.debug("cache hit for %s/%s at N=%d", spec_key, method, N)
        return BSequence(tuple(Fraction(v) for v in cached["b"]), cached["origin"])
    result = compute()
    record = {"b": [str(v) for v in result.b], "origin": result.origin}
    try:
        models.upsert_bsequence_entry(spec_key, method, N, record)
    except sqlite3.Error as exc:
        logger.warning("could not store %s/%s: %s", spec_key, method, exc)
    return result


def clear_all() -> None:
    try:
        models.initialize_schema()
        models.delete_bsequences()
    except sqlite3.Error as exc:
        logger.warning("could not clear cache: %s", exc)

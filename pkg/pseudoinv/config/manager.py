"""Configuration management utilities."""

from __future__ import annotations

import json
import logging
import os
import sqlite3
from collections.abc import MutableMapping
from copy import deepcopy
from pathlib import Path
from typing import Any

from pseudoinv.config.defaults import get_default_config
from pseudoinv.db import db, models

logger = logging.getLogger(__name__)


def _deep_merge(base: dict[str, Any], overrides: dict[str, Any]) -> dict[str, Any]:
    result = deepcopy(base)
    for key, value in overrides.items():
        if (
            key in result
            and isinstance(result[key], MutableMapping)
            and isinstance(value, MutableMapping)
        ):
            result[key] = _deep_merge(result[key], value)  # type: ignore[assignment]
        else:
            result[key] = value
    return result


def _load_file(path: str) -> dict[str, Any]:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        logger.warning("ignoring config file %s: %s", path, exc)
        return {}
    if not isinstance(payload, dict):
        logger.warning("ignoring config file %s: top level is not an object", path)
        return {}
    return payload


class ConfigManager:
    """Defaults, overlaid by the ``PSEUDOINV_CONFIG`` file, overlaid by stored settings."""

    def __init__(self) -> None:
        self._config = get_default_config()
        self.refresh()

    @property
    def data(self) -> dict[str, Any]:
        return deepcopy(self._config)

    def get(self, section: str, key: str, default: Any = None) -> Any:
        value = self._config.get(section, {})
        if isinstance(value, MutableMapping):
            return value.get(key, default)
        return default

    def refresh(self) -> None:
        merged = get_default_config()
        config_file = os.environ.get("PSEUDOINV_CONFIG")
        if config_file:
            merged = _deep_merge(merged, _load_file(config_file))
        self._apply_cache_path(merged)
        if db.exists():
            try:
                stored = models.fetch_all_configs()
            except sqlite3.OperationalError:
                # Tables may not be initialized yet; keep what we have.
                stored = {}
            for key, raw_value in stored.items():
                try:
                    parsed = json.loads(raw_value)
                except json.JSONDecodeError:
                    continue
                if key in merged and isinstance(merged[key], MutableMapping) and isinstance(parsed, MutableMapping):
                    merged[key] = _deep_merge(merged[key], parsed)  # type: ignore[assignment]
                else:
                    merged[key] = parsed
        self._config = merged

    def update(self, payload: dict[str, Any]) -> dict[str, Any]:
        merged = _deep_merge(self._config, payload)
        methods_changed = self._config.get("bfun", {}).get("methods") != merged.get("bfun", {}).get("methods")
        cache_disabled = self._config.get("cache", {}).get("enabled") and not merged.get("cache", {}).get("enabled")
        models.initialize_schema()
        for key, value in merged.items():
            if isinstance(value, (dict, list)):
                models.upsert_config(key, json.dumps(value))
        if methods_changed or cache_disabled:
            from pseudoinv.services import cache

            cache.clear_all()
        self._config = merged
        return self.data

    def override(self, payload: dict[str, Any]) -> None:
        """Apply settings for this process only."""
        self._config = _deep_merge(self._config, payload)

    @staticmethod
    def _apply_cache_path(config: dict[str, Any]) -> None:
        path = config.get("cache", {}).get("path")
        if path and not os.environ.get("PSEUDOINV_DB"):
            db.use_path(path)


config_manager = ConfigManager()

"""SQLite schema and CRUD helpers."""

from __future__ import annotations

import json
from datetime import datetime, timezone
from typing import Any, Optional

from . import db

INIT_SCRIPT = """
CREATE TABLE IF NOT EXISTS app_config (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    key TEXT NOT NULL UNIQUE,
    value TEXT NOT NULL,
    updated_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
);

CREATE TABLE IF NOT EXISTS bseq_cache (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    spec_key TEXT NOT NULL,
    method TEXT NOT NULL,
    precision INTEGER NOT NULL,
    data TEXT NOT NULL,
    fetched_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP,
    UNIQUE(spec_key, method, precision)
);
"""


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def initialize_schema() -> None:
    """Create database tables if they do not exist."""
    db.execute_script(INIT_SCRIPT)


def upsert_config(key: str, value_json: str) -> None:
    sql = """
        INSERT INTO app_config (key, value, updated_at)
        VALUES (?, ?, ?)
        ON CONFLICT(key) DO UPDATE SET value=excluded.value, updated_at=excluded.updated_at
    """
    db.execute(sql, (key, value_json, _now()))


def fetch_all_configs() -> dict[str, str]:
    rows = db.query("SELECT key, value FROM app_config")
    return {row["key"]: row["value"] for row in rows}


def get_bsequence_entry(spec_key: str, method: str, precision: int) -> Optional[dict[str, Any]]:
    rows = db.query(
        """
        SELECT data, fetched_at
        FROM bseq_cache
        WHERE spec_key = ? AND method = ? AND precision = ?
        """,
        (spec_key, method, precision),
    )
    if not rows:
        return None
    row = rows[0]
    payload = json.loads(row["data"])
    payload["fetched_at"] = row["fetched_at"]
    return payload


def upsert_bsequence_entry(spec_key: str, method: str, precision: int, data: dict[str, Any]) -> None:
    sql = """
        INSERT INTO bseq_cache (spec_key, method, precision, data, fetched_at)
        VALUES (?, ?, ?, ?, ?)
        ON CONFLICT(spec_key, method, precision)
        DO UPDATE SET data=excluded.data, fetched_at=excluded.fetched_at
    """
    db.execute(sql, (spec_key, method, precision, json.dumps(data), _now()))


def delete_bsequences() -> None:
    db.execute("DELETE FROM bseq_cache")

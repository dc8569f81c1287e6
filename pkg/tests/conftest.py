from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from pseudoinv.config.manager import config_manager
from pseudoinv.db import db


@pytest.fixture(autouse=True)
def isolated_db(tmp_path, monkeypatch):
    """Point SQLite and the config manager at a throwaway database."""
    path = tmp_path / "pseudoinv.db"
    monkeypatch.setenv("PSEUDOINV_DB", str(path))
    monkeypatch.delenv("PSEUDOINV_CONFIG", raising=False)
    previous = db.path
    db.use_path(path)
    config_manager.refresh()
    yield path
    db.use_path(previous)
    config_manager.refresh()


def fractions(limit: int = 6) -> st.SearchStrategy[Fraction]:
    return st.builds(
        Fraction,
        st.integers(min_value=-limit, max_value=limit),
        st.integers(min_value=1, max_value=limit),
    )


def coefficient_lists(min_size: int = 1, max_size: int = 8, limit: int = 6) -> st.SearchStrategy[list[Fraction]]:
    return st.lists(fractions(limit), min_size=min_size, max_size=max_size)


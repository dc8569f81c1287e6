"""Default configuration schema for pseudoinv."""

from __future__ import annotations

METHODS = ("definition", "matrix", "half", "gamma", "rational")

DEFAULT_CONFIG: dict[str, object] = {
    "precision": {
        "default": 16,
        "max": 512,
    },
    "bfun": {
        "methods": list(METHODS),
    },
    "output": {
        "format": "json",
        "indent": 2,
    },
    "cache": {
        "enabled": False,
        "path": "",
    },
    "logging": {
        "level": "WARNING",
    },
    "server": {
        "port": 5010,
        "debug": False,
    },
}


def get_default_config() -> dict[str, object]:
    """Return a deep copy of the default configuration schema."""
    from copy import deepcopy

    return deepcopy(DEFAULT_CONFIG)

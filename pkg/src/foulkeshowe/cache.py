"""Disk cache for expensive combinatorial tables.

Entries live as JSON files under the directory named by the
``FOULKESHOWE_CACHE_DIR`` environment variable (default ``.fhcache``).
File names carry a format-version prefix so stale layouts are ignored
rather than misread.  Writes are atomic (write temp file, then rename), so
a killed process never leaves a truncated entry behind.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

CACHE_ENV_VAR = "FOULKESHOWE_CACHE_DIR"
CACHE_VERSION = 1


def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV_VAR, ".fhcache"))


def _path(kind: str, key: str) -> Path:
    return cache_dir() / f"v{CACHE_VERSION}-{kind}-{key}.json"


def _load(kind: str, key: str):
    path = _path(kind, key)
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None


def _store(kind: str, key: str, payload) -> None:
    path = _path(kind, key)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except OSError:
        pass  # a read-only cache directory disables caching, nothing more


def character_table_cached(n: int) -> dict:
    """Character table of S_n, loaded from disk when available."""
    from .combinatorics import character_table, seed_character_memo

    raw = _load("chartable", str(n))
    if raw is not None:
        table = {
            (tuple(lam), tuple(mu)): int(v) for lam, mu, v in raw
        }
        seed_character_memo(table)
        return table
    table = character_table(n)
    _store(
        "chartable", str(n), [[list(lam), list(mu), v] for (lam, mu), v in table.items()]
    )
    return table


def block_partitions_cached(a: int, b: int) -> list:
    """Canonical block set partitions, loaded from disk when available."""
    from .combinatorics import enumerate_block_partitions

    raw = _load("blockparts", f"{a}x{b}")
    if raw is not None:
        return [tuple(tuple(blk) for blk in part) for part in raw]
    parts = enumerate_block_partitions(a, b)
    _store("blockparts", f"{a}x{b}", [[list(blk) for blk in part] for part in parts])
    return parts

"""
database.py
-----------
SQLite connection, schema creation, and maintenance (auto-delete) for the
verification report archive.

Layout on disk:
    <project_root>/
    └── data/
        └── fermicat.db        ← database file

Set FERMICAT_DATA_DIR to keep the archive somewhere else; it is read on
every call so tests can point it at a temporary directory.
"""

import logging
import os
import sqlite3
from pathlib import Path

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Paths
# ---------------------------------------------------------------------------

_PROJECT_ROOT = Path(__file__).parent.parent.parent
DATA_DIR      = _PROJECT_ROOT / "data"
DB_NAME       = "fermicat.db"
DB_PATH       = DATA_DIR / DB_NAME

# Maximum number of archived reports to keep.
# When exceeded, the oldest reports are pruned.
MAX_HISTORY: int = 500


def data_dir() -> Path:
    override = os.environ.get("FERMICAT_DATA_DIR")
    return Path(override) if override else DATA_DIR


def db_path() -> Path:
    return data_dir() / DB_NAME


# ---------------------------------------------------------------------------
# Schema
# ---------------------------------------------------------------------------

_CREATE_TABLE = """
CREATE TABLE IF NOT EXISTS reports (
    id          INTEGER PRIMARY KEY AUTOINCREMENT,
    created_at  DATETIME DEFAULT CURRENT_TIMESTAMP,
    suite       TEXT NOT NULL,
    n           INTEGER,
    seed        INTEGER,
    passed      INTEGER NOT NULL,
    failed      INTEGER NOT NULL,
    report      TEXT        -- JSON object, the full report
);
"""

_CREATE_INDEX = """
CREATE INDEX IF NOT EXISTS idx_reports_created_at ON reports (created_at DESC);
"""


# ---------------------------------------------------------------------------
# Connection helper
# ---------------------------------------------------------------------------

def get_connection() -> sqlite3.Connection:
    """Open a connection with dict-like rows. Callers close it."""
    conn = sqlite3.connect(db_path())
    conn.row_factory = sqlite3.Row
    conn.execute("PRAGMA journal_mode=WAL")
    return conn


# ---------------------------------------------------------------------------
# Initialisation
# ---------------------------------------------------------------------------

def init_db() -> None:
    """
    Create the data directory and schema, then prune anything beyond
    MAX_HISTORY left by a previous run.
    """
    data_dir().mkdir(parents=True, exist_ok=True)

    conn = get_connection()
    try:
        conn.execute(_CREATE_TABLE)
        conn.execute(_CREATE_INDEX)
        conn.commit()
        logger.info("Report archive ready at %s", db_path())
    finally:
        conn.close()

    _prune_oldest()


# ---------------------------------------------------------------------------
# Auto-delete / pruning
# ---------------------------------------------------------------------------

def _prune_oldest() -> None:
    """Delete the oldest reports so the total stays at or below MAX_HISTORY."""
    conn = get_connection()
    try:
        count = conn.execute("SELECT COUNT(*) FROM reports").fetchone()[0]
        excess = count - MAX_HISTORY

        if excess <= 0:
            return

        rows = conn.execute(
            "SELECT id FROM reports ORDER BY created_at ASC, id ASC LIMIT ?",
            (excess,),
        ).fetchall()
        ids_to_delete = [r["id"] for r in rows]

        conn.execute(
            f"DELETE FROM reports WHERE id IN ({','.join('?' * len(ids_to_delete))})",
            ids_to_delete,
        )
        conn.commit()
        logger.info("Pruned %d old report(s) to stay within MAX_HISTORY=%d.", excess, MAX_HISTORY)

    finally:
        conn.close()


def maybe_prune() -> None:
    """Hook for queries.py to call after saving a report."""
    _prune_oldest()

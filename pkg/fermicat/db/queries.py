"""
queries.py
----------
All database read/write operations for the reports table.

Public API:
    save_report(report)       → int (new record id)
    list_reports(...)         → list[dict]
    count_reports()           → int
    delete_report(id)         → bool
    export_csv()              → str (CSV text)
"""

import csv
import io
import json
import logging

from ..reports import Report
from .database import get_connection, maybe_prune

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Save
# ---------------------------------------------------------------------------

def save_report(report: Report) -> int:
    """
    Persist one verification report.

    Returns:
        The new record's integer id.
    """
    conn = get_connection()
    try:
        cur = conn.execute(
            """
            INSERT INTO reports (suite, n, seed, passed, failed, report)
            VALUES (?, ?, ?, ?, ?, ?)
            """,
            (
                report.suite,
                report.n,
                report.seed,
                report.passed_count,
                report.failed_count,
                json.dumps(report.to_dict(), sort_keys=True),
            ),
        )
        conn.commit()
        new_id = cur.lastrowid
        logger.info("Saved report id=%d  suite=%s  passed=%d  failed=%d",
                    new_id, report.suite, report.passed_count, report.failed_count)
    finally:
        conn.close()

    maybe_prune()

    return new_id


# ---------------------------------------------------------------------------
# List  (paginated)
# ---------------------------------------------------------------------------

def list_reports(limit: int = 20, offset: int = 0) -> list[dict]:
    """
    Return a page of archived reports, newest first.

    Args:
        limit:  Number of records per page (capped at 100).
        offset: Number of records to skip.
    """
    limit = min(limit, 100)

    conn = get_connection()
    try:
        rows = conn.execute(
            """
            SELECT id, created_at, suite, n, seed, passed, failed, report
            FROM reports
            ORDER BY created_at DESC, id DESC
            LIMIT ? OFFSET ?
            """,
            (limit, offset),
        ).fetchall()

        results = []
        for row in rows:
            d = dict(row)
            d["report"] = _safe_json(d.get("report"), fallback={})
            results.append(d)

        return results

    finally:
        conn.close()


def count_reports() -> int:
    conn = get_connection()
    try:
        return conn.execute("SELECT COUNT(*) FROM reports").fetchone()[0]
    finally:
        conn.close()


# ---------------------------------------------------------------------------
# Delete
# ---------------------------------------------------------------------------

def delete_report(record_id: int) -> bool:
    """
    Returns:
        True  if the report existed and was deleted.
        False if no report with that id was found.
    """
    conn = get_connection()
    try:
        cur = conn.execute("DELETE FROM reports WHERE id = ?", (record_id,))
        conn.commit()
        if cur.rowcount == 0:
            logger.warning("delete_report: id=%d not found.", record_id)
            return False
        logger.info("Deleted report id=%d", record_id)
        return True
    finally:
        conn.close()


# ---------------------------------------------------------------------------
# Export CSV
# ---------------------------------------------------------------------------

def export_csv() -> str:
    """
    Export every archived report as CSV, newest first. The full report JSON
    is left out; the CSV carries the summary columns only.
    """
    conn = get_connection()
    try:
        rows = conn.execute(
            """
            SELECT id, created_at, suite, n, seed, passed, failed
            FROM reports
            ORDER BY created_at DESC, id DESC
            """
        ).fetchall()
    finally:
        conn.close()

    output = io.StringIO()
    writer = csv.writer(output)
    writer.writerow(["id", "created_at", "suite", "n", "seed", "passed", "failed"])
    for row in rows:
        writer.writerow([
            row["id"],
            row["created_at"],
            row["suite"],
            row["n"],
            row["seed"],
            row["passed"],
            row["failed"],
        ])

    return output.getvalue()


# ---------------------------------------------------------------------------
# Private helpers
# ---------------------------------------------------------------------------

def _safe_json(value: str | None, fallback):
    """Parse a JSON string, returning fallback on any error."""
    if not value:
        return fallback
    try:
        return json.loads(value)
    except (json.JSONDecodeError, TypeError):
        logger.warning("Could not parse JSON value: %r", value)
        return fallback

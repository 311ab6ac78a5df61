# database/records.py
import json
import logging
from typing import Any, Dict, Iterable, List, Optional

from sqlalchemy.orm import Session

from database.models import ScanRecord, SuiteResult, SweepRun

logger = logging.getLogger("database.records")


def record_sweep(db: Session, report: Dict[str, Any]) -> SweepRun:
    """Store a sweep report (SweepReport.model_dump()) with one row per suite."""
    run = SweepRun(
        max_cells=report["max_cells"],
        m_max=report["m_max"],
        n_max=report["n_max"],
        suites=json.dumps([s["name"] for s in report["suites"]]),
        passed=report["passed"],
    )
    for suite in report["suites"]:
        run.results.append(
            SuiteResult(name=suite["name"], checked=suite["checked"], failures=json.dumps(suite["failures"]), passed=suite["passed"])
        )
    try:
        db.add(run)
        db.commit()
        db.refresh(run)
    except Exception:
        db.rollback()
        raise
    logger.info("recorded sweep run %s (%d suites)", run.id, len(report["suites"]))
    return run


def record_scan(db: Session, records: Iterable[Dict[str, Any]]) -> int:
    """Upsert scan records keyed on (board, n, m, specialize_p1). Returns the number written."""
    written = 0
    try:
        for rec in records:
            row = (
                db.query(ScanRecord)
                .filter(
                    ScanRecord.board == rec["board"],
                    ScanRecord.n == rec["n"],
                    ScanRecord.m == rec["m"],
                    ScanRecord.specialize_p1 == rec["specialize_p1"],
                )
                .first()
            )
            if row is None:
                row = ScanRecord(board=rec["board"], n=rec["n"], m=rec["m"], specialize_p1=rec["specialize_p1"])
                db.add(row)
            row.negative_found = rec["negative_found"]
            row.witness = rec.get("witness")
            written += 1
        db.commit()
    except Exception:
        db.rollback()
        raise
    return written


def run_to_dict(run: SweepRun) -> Dict[str, Any]:
    return {
        "id": run.id,
        "max_cells": run.max_cells,
        "m_max": run.m_max,
        "n_max": run.n_max,
        "passed": run.passed,
        "created_at": str(run.created_at),
        "suites": [
            {"name": r.name, "checked": r.checked, "failures": json.loads(r.failures), "passed": r.passed} for r in run.results
        ],
    }


def list_runs(db: Session) -> List[Dict[str, Any]]:
    rows = db.query(SweepRun).order_by(SweepRun.id.desc()).all()
    return [run_to_dict(r) for r in rows]


def list_scan_records(db: Session, n: Optional[int] = None, m: Optional[int] = None) -> List[Dict[str, Any]]:
    query = db.query(ScanRecord)
    if n is not None:
        query = query.filter(ScanRecord.n == n)
    if m is not None:
        query = query.filter(ScanRecord.m == m)
    rows = query.order_by(ScanRecord.n, ScanRecord.m, ScanRecord.board, ScanRecord.specialize_p1).all()
    return [
        {
            "board": r.board,
            "n": r.n,
            "m": r.m,
            "specialize_p1": r.specialize_p1,
            "negative_found": r.negative_found,
            "witness": r.witness,
        }
        for r in rows
    ]

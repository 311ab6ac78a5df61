# api/runs.py
from typing import Optional

from fastapi import APIRouter, Depends
from sqlalchemy.orm import Session

from database.db_session import get_db
from database.records import list_runs, list_scan_records

router = APIRouter(tags=["records"])


@router.get("/runs", summary="Recorded sweep runs, newest first")
def get_runs(db: Session = Depends(get_db)):
    return {"runs": list_runs(db)}


@router.get("/scans", summary="Recorded positivity scan records")
def get_scans(n: Optional[int] = None, m: Optional[int] = None, db: Session = Depends(get_db)):
    return {"records": list_scan_records(db, n=n, m=m)}

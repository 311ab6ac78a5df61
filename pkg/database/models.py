# database/models.py
from datetime import datetime

from sqlalchemy import Boolean, Column, DateTime, ForeignKey, Integer, String, Text, UniqueConstraint
from sqlalchemy.orm import relationship

from database.db_session import Base


class SweepRun(Base):
    __tablename__ = "sweep_runs"

    id = Column(Integer, primary_key=True, index=True)
    max_cells = Column(Integer, nullable=False)
    m_max = Column(Integer, nullable=False)
    n_max = Column(Integer, nullable=False)
    suites = Column(Text, nullable=False)  # JSON list of suite names
    passed = Column(Boolean, nullable=False)
    created_at = Column(DateTime, default=datetime.utcnow)

    results = relationship("SuiteResult", back_populates="run", cascade="all, delete-orphan", order_by="SuiteResult.id")


class SuiteResult(Base):
    __tablename__ = "suite_results"

    id = Column(Integer, primary_key=True, index=True)
    run_id = Column(Integer, ForeignKey("sweep_runs.id"), nullable=False)
    name = Column(String, nullable=False)
    checked = Column(Integer, nullable=False)
    failures = Column(Text, nullable=False)  # JSON list of witnesses
    passed = Column(Boolean, nullable=False)

    run = relationship("SweepRun", back_populates="results")


class ScanRecord(Base):
    __tablename__ = "scan_records"
    __table_args__ = (UniqueConstraint("board", "n", "m", "specialize_p1", name="uq_scan_key"),)

    id = Column(Integer, primary_key=True, index=True)
    board = Column(String, nullable=False, index=True)
    n = Column(Integer, nullable=False)
    m = Column(Integer, nullable=False)
    specialize_p1 = Column(Boolean, nullable=False)
    negative_found = Column(Boolean, nullable=False)
    witness = Column(String, nullable=True)
    created_at = Column(DateTime, default=datetime.utcnow)

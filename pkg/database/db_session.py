# database/db_session.py
"""
Database session and initialization module.
Uses SQLite (DB_PATH from settings, data/rooks.db by default).
"""

from sqlalchemy import create_engine
from sqlalchemy.orm import declarative_base, sessionmaker

from settings import DB_PATH

SQLALCHEMY_DATABASE_URL = f"sqlite:///{DB_PATH}"


engine = create_engine(SQLALCHEMY_DATABASE_URL, connect_args={"check_same_thread": False})

SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)
Base = declarative_base()


def get_db():
    """
    Dependency that provides a database session to API routes.
    """
    db = SessionLocal()
    try:
        yield db
    finally:
        db.close()


def init_db(bind=None):
    """
    Creates all tables declared in database/models.py
    """
    from database import models  # noqa: F401  registers the tables on Base

    Base.metadata.create_all(bind=bind or engine)

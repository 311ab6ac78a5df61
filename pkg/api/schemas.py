# api/schemas.py
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from settings import SWEEP_M_MAX, SWEEP_MAX_CELLS, SWEEP_N_MAX, SWEEP_WORKERS


# ------------------------------
# Request bodies (board as "h1,h2,...")
# ------------------------------
class AnalyzeIn(BaseModel):
    board: str
    m: int = 1


class VerifyIn(BaseModel):
    board: str
    m: int = 1
    mode: Optional[Literal["symbolic", "numeric"]] = None
    x_values: Optional[List[int]] = None
    columns: Optional[int] = None

    @model_validator(mode="after")
    def numeric_needs_values(self):
        if self.mode == "numeric" and self.x_values == []:
            raise ValueError("numeric mode needs at least one x value")
        return self


class CanonIn(BaseModel):
    board: str
    m: int = 1


class ClassIn(BaseModel):
    board: str
    m: int = 1
    relation: Optional[Literal["level", "weight"]] = None
    n: Optional[int] = None
    check: bool = False


class CatalanIn(BaseModel):
    board: Optional[str] = None
    n: Optional[int] = None
    m: int = 1


class HitIn(BaseModel):
    board: Optional[str] = None
    n: int
    m: int = 1
    max_cells: Optional[int] = None
    singleton_only: bool = False
    p1: bool = False
    check: bool = False


class SweepIn(BaseModel):
    max_cells: int = SWEEP_MAX_CELLS
    m_max: int = SWEEP_M_MAX
    n_max: int = SWEEP_N_MAX
    suites: List[str] = Field(default_factory=lambda: ["all"])
    workers: int = SWEEP_WORKERS

    @model_validator(mode="after")
    def some_suite(self):
        if not self.suites:
            raise ValueError("at least one suite (or 'all') is required")
        return self

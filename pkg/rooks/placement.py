# rooks/placement.py
"""
Brute-force rook and file placements.

Cells are (column, row) pairs, both 1-based, naming the northeast corner of
the unit square. Rows are grouped into levels of m consecutive rows.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence, Union

from rooks.board import FerrersBoard, level_of
from rooks.errors import InvalidInputError, InvalidParameterError, check_m
from rooks.polynomial import PQ, LaurentPoly, elementary_symmetric, falling_factorial_value

logger = logging.getLogger("rooks.placement")

Cell = tuple[int, int]


class PlacementKind(str, Enum):
    ROOK = "rook"
    FILE = "file"


@dataclass(frozen=True)
class CellSetBoard:
    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        cells = frozenset((int(c), int(r)) for c, r in self.cells)
        if any(c < 1 or r < 1 for c, r in cells):
            raise InvalidInputError("cell coordinates are 1-based")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_ferrers(cls, board: FerrersBoard) -> "CellSetBoard":
        return cls(frozenset((j, r) for j, b in enumerate(board.columns, start=1) for r in range(1, b + 1)))

    @classmethod
    def rectangle(cls, columns: int, rows: int) -> "CellSetBoard":
        return cls(frozenset((c, r) for c in range(1, columns + 1) for r in range(1, rows + 1)))

    @property
    def size(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def column_indices(self) -> list[int]:
        return sorted({c for c, _ in self.cells})

    def column_rows(self, column: int) -> list[int]:
        return sorted(r for c, r in self.cells if c == column)


AnyBoard = Union[FerrersBoard, CellSetBoard]


def as_cells(board: AnyBoard) -> CellSetBoard:
    return board if isinstance(board, CellSetBoard) else CellSetBoard.from_ferrers(board)


@dataclass(frozen=True)
class Placement:
    rooks: tuple[Cell, ...]
    kind: PlacementKind = PlacementKind.ROOK
    m: int = 1

    def __post_init__(self) -> None:
        rooks = tuple(sorted((int(c), int(r)) for c, r in self.rooks))
        object.__setattr__(self, "rooks", rooks)
        object.__setattr__(self, "kind", PlacementKind(self.kind))
        check_m(self.m)
        columns = [c for c, _ in rooks]
        if len(set(columns)) != len(columns):
            raise InvalidInputError(f"two rooks share a column in {rooks}")
        if self.kind is PlacementKind.ROOK:
            levels = [level_of(r, self.m) for _, r in rooks]
            if len(set(levels)) != len(levels):
                raise InvalidInputError(f"two rooks share a {self.m}-level in {rooks}")

    def __len__(self) -> int:
        return len(self.rooks)

    @property
    def column_indices(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.rooks)


@dataclass(frozen=True)
class PlacementStats:
    alpha: int
    beta: int
    epsilon: int
    inv_m: int
    coinv_m: int
    column_indices: tuple[int, ...] = field(default=())

    def inv_decomposes(self) -> bool:
        return self.inv_m == self.alpha + self.epsilon

    def coinv_decomposes(self) -> bool:
        return self.coinv_m == self.beta + self.epsilon


def enumerate_placements(board: AnyBoard, k: int, kind: PlacementKind | str = PlacementKind.ROOK, m: int = 1) -> Iterator[Placement]:
    """Every k-rook placement of the given kind on the board, columns chosen left to right."""
    if k < 0:
        raise InvalidParameterError(f"rook count must be nonnegative, got {k}")
    check_m(m)
    kind = PlacementKind(kind)
    cells = as_cells(board)
    columns = cells.column_indices()
    rows = {c: cells.column_rows(c) for c in columns}
    chosen: list[Cell] = []

    def extend(start: int, remaining: int, used_levels: int) -> Iterator[Placement]:
        if remaining == 0:
            yield Placement(tuple(chosen), kind, m)
            return
        for index in range(start, len(columns) - remaining + 1):
            column = columns[index]
            for row in rows[column]:
                bit = 1 << (level_of(row, m) - 1) if kind is PlacementKind.ROOK else 0
                if used_levels & bit:
                    continue
                chosen.append((column, row))
                yield from extend(index + 1, remaining - 1, used_levels | bit)
                chosen.pop()

    return extend(0, k, 0)


def _check_on_board(placement: Placement, cells: CellSetBoard) -> None:
    off = [rook for rook in placement.rooks if rook not in cells]
    if off:
        raise InvalidInputError(f"rooks {off} are not on the board")


def r_km(board: AnyBoard, k: int, m: int) -> int:
    return sum(1 for _ in enumerate_placements(board, k, PlacementKind.ROOK, m))


def m_weight(placement: Placement, m: int) -> int:
    """Product over rows of 1(1 - m)(1 - 2m)... with one factor per rook in the row."""
    check_m(m)
    weight = 1
    for count in Counter(r for _, r in placement.rooks).values():
        weight *= falling_factorial_value(1, count, m)
    return weight


def f_km(board: AnyBoard, k: int, m: int) -> int:
    return sum(m_weight(f, m) for f in enumerate_placements(board, k, PlacementKind.FILE, m))


def file_count(board: FerrersBoard, k: int) -> int:
    return elementary_symmetric(board.columns, k)


def _max_rooks(board: AnyBoard) -> int:
    return len(as_cells(board).column_indices())


def _strip(values: list[int]) -> tuple[int, ...]:
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return tuple(values)


@lru_cache(maxsize=4096)
def _r_vector(columns: tuple[int, ...], m: int) -> tuple[int, ...]:
    board = FerrersBoard(columns)
    return _strip([r_km(board, k, m) for k in range(_max_rooks(board) + 1)])


@lru_cache(maxsize=4096)
def _f_vector(columns: tuple[int, ...], m: int) -> tuple[int, ...]:
    board = FerrersBoard(columns)
    return _strip([f_km(board, k, m) for k in range(_max_rooks(board) + 1)])


def r_vector(board: FerrersBoard, m: int) -> tuple[int, ...]:
    """(r_0m, r_1m, ...) with trailing zeros dropped."""
    check_m(m)
    return _r_vector(board.columns, m)


def f_vector(board: FerrersBoard, m: int) -> tuple[int, ...]:
    check_m(m)
    return _f_vector(board.columns, m)


def m_cohook(cell: Cell, board: AnyBoard, m: int) -> frozenset[Cell]:
    """The cell, the cells below it in its column, and its m-coleg."""
    cells = as_cells(board)
    column, row = cell
    level = level_of(row, m)
    return frozenset(
        (c, r) for c, r in cells.cells if (c == column and r <= row) or (c > column and level_of(r, m) == level)
    )


def _in_coleg(cell: Cell, rooks: Sequence[Cell], m: int) -> bool:
    column, row = cell
    return any(column > rc and level_of(row, m) == level_of(rr, m) for rc, rr in rooks)


def m_diagram(placement: Placement, board: AnyBoard, m: int) -> frozenset[Cell]:
    """Cells that are not a rook, not below a rook in its column, and not in any m-coleg."""
    cells = as_cells(board)
    _check_on_board(placement, cells)
    tops = dict(placement.rooks)
    return frozenset(
        cell
        for cell in cells.cells
        if not (cell[0] in tops and cell[1] <= tops[cell[0]]) and not _in_coleg(cell, placement.rooks, m)
    )


def _co_diagram(placement: Placement, cells: CellSetBoard, m: int) -> frozenset[Cell]:
    tops = dict(placement.rooks)
    return frozenset(
        cell
        for cell in cells.cells
        if not (cell[0] in tops and cell[1] >= tops[cell[0]]) and not _in_coleg(cell, placement.rooks, m)
    )


def placement_stats(placement: Placement, board: AnyBoard, m: int) -> PlacementStats:
    check_m(m)
    cells = as_cells(board)
    _check_on_board(placement, cells)
    tops = dict(placement.rooks)
    alpha = beta = epsilon = 0
    for cell in cells.cells:
        column, row = cell
        if cell in placement.rooks or _in_coleg(cell, placement.rooks, m):
            continue
        if column not in tops:
            epsilon += 1
        elif row > tops[column]:
            alpha += 1
        else:
            beta += 1
    return PlacementStats(
        alpha=alpha,
        beta=beta,
        epsilon=epsilon,
        inv_m=len(m_diagram(placement, cells, m)),
        coinv_m=len(_co_diagram(placement, cells, m)),
        column_indices=placement.column_indices,
    )


def pq_weight(placement: Placement, board: AnyBoard, m: int) -> LaurentPoly:
    stats = placement_stats(placement, board, m)
    return LaurentPoly(PQ, {(stats.beta - sum(stats.column_indices) * m, stats.inv_m): 1})


def pq_rook_poly(board: FerrersBoard, k: int, m: int) -> LaurentPoly:
    """r_(k,m)[B], the p,q-count of k-rook m-level placements."""
    cells = as_cells(board)
    total = LaurentPoly.zero(PQ)
    for placement in enumerate_placements(cells, k, PlacementKind.ROOK, m):
        total = total + pq_weight(placement, cells, m)
    return total


@lru_cache(maxsize=1024)
def _pq_rook_vector(columns: tuple[int, ...], m: int) -> tuple[LaurentPoly, ...]:
    board = FerrersBoard(columns)
    return tuple(pq_rook_poly(board, k, m) for k in range(len(columns) + 1))


def pq_rook_vector(board: FerrersBoard, m: int) -> tuple[LaurentPoly, ...]:
    """r_(k,m)[B] for k = 0..number of columns."""
    check_m(m)
    return _pq_rook_vector(board.columns, m)


def permutation_to_placement(perm: Sequence[int]) -> Placement:
    """One-line notation a_1...a_n to the rooks (i, n - a_i + 1) on the n x n board."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidInputError(f"{tuple(perm)} is not a permutation of 1..{n}")
    return Placement(tuple((i, n - a + 1) for i, a in enumerate(perm, start=1)), PlacementKind.ROOK, 1)


def inversions(sequence: Sequence[int]) -> int:
    return sum(1 for i in range(len(sequence)) for j in range(i + 1, len(sequence)) if sequence[i] > sequence[j])


def coinversions(sequence: Sequence[int]) -> int:
    return sum(1 for i in range(len(sequence)) for j in range(i + 1, len(sequence)) if sequence[i] < sequence[j])


def permutations_pq_generating_function(n: int) -> LaurentPoly:
    """Sum of p^coinv q^inv over the permutations of 1..n."""
    if n < 0:
        raise InvalidParameterError(f"n must be nonnegative, got {n}")
    counts: Counter[tuple[int, int]] = Counter()
    for perm in permutations(range(1, n + 1)):
        counts[(coinversions(perm), inversions(perm))] += 1
    return LaurentPoly(PQ, dict(counts))


def placements_on(board: AnyBoard, rooks: Iterable[Cell], kind: PlacementKind | str = PlacementKind.ROOK, m: int = 1) -> Placement:
    """Build a placement and check it sits on the board."""
    placement = Placement(tuple(rooks), PlacementKind(kind), m)
    _check_on_board(placement, as_cells(board))
    return placement

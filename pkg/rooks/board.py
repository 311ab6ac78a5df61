# rooks/board.py
"""
Ferrers boards and their level structure.

A board is stored exactly as given: a weakly increasing tuple of column
heights, possibly with leading zero columns. Zone reporting uses 1-based
column indices; root vectors and triangle containment use 0-based ones.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from sympy.utilities.iterables import partitions

from rooks.errors import InvalidInputError, InvalidParameterError, check_m

logger = logging.getLogger("rooks.board")


@dataclass(frozen=True)
class FerrersBoard:
    columns: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        columns = tuple(int(c) for c in self.columns)
        object.__setattr__(self, "columns", columns)
        if any(c < 0 for c in columns):
            raise InvalidInputError(f"negative column height in {columns}")
        if any(a > b for a, b in zip(columns, columns[1:])):
            raise InvalidInputError(f"column heights {columns} are not weakly increasing")

    @property
    def size(self) -> int:
        """|B|, the number of cells."""
        return sum(self.columns)

    @property
    def n(self) -> int:
        return len(self.columns)

    def __len__(self) -> int:
        return len(self.columns)

    def __iter__(self) -> Iterator[int]:
        return iter(self.columns)

    def __getitem__(self, index: int) -> int:
        return self.columns[index]

    def __str__(self) -> str:
        return format_board(self)

    def height(self, column: int) -> int:
        """Height of the 1-based column."""
        return self.columns[column - 1]


@dataclass(frozen=True)
class Zone:
    start: int
    end: int
    floor_value: int
    remainder: int
    partial_remainders: tuple[int, ...]

    @property
    def columns(self) -> range:
        return range(self.start, self.end + 1)


@dataclass(frozen=True)
class Level:
    index: int
    m: int

    @property
    def rows(self) -> range:
        return range((self.index - 1) * self.m + 1, self.index * self.m + 1)

    def __contains__(self, row: int) -> bool:
        return row in self.rows


def level_of(row: int, m: int) -> int:
    return (row - 1) // m + 1


def parse_board(text: str) -> FerrersBoard:
    text = (text or "").strip()
    if not text:
        return FerrersBoard(())
    try:
        heights = tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise InvalidInputError(f"board '{text}' is not a comma-separated list of integers") from exc
    return FerrersBoard(heights)


def format_board(board: FerrersBoard) -> str:
    return ",".join(str(c) for c in board.columns)


def m_floor(n: int, m: int) -> int:
    check_m(m)
    return (n // m) * m


def remainder(n: int, m: int) -> int:
    return n - m_floor(n, m)


def zones(board: FerrersBoard, m: int) -> list[Zone]:
    check_m(m)
    result: list[Zone] = []
    columns = board.columns
    start = 0
    while start < len(columns):
        floor_value = m_floor(columns[start], m)
        end = start
        while end + 1 < len(columns) and m_floor(columns[end + 1], m) == floor_value:
            end += 1
        partial = [0]
        for j in range(start, end + 1):
            partial.append(partial[-1] + remainder(columns[j], m))
        result.append(Zone(start + 1, end + 1, floor_value, partial[-1], tuple(partial)))
        start = end + 1
    return result


def is_singleton(board: FerrersBoard, m: int) -> bool:
    check_m(m)
    columns = board.columns
    for a, b in zip(columns, columns[1:]):
        if m_floor(a, m) != a and m_floor(b, m) <= m_floor(a, m):
            return False
    return True


def is_m_increasing(board: FerrersBoard, m: int) -> bool:
    check_m(m)
    columns = board.columns
    if columns and columns[0] == 0:
        return False
    return all(b >= a + m for a, b in zip(columns, columns[1:]))


def with_leading_zero(board: FerrersBoard) -> FerrersBoard:
    if board.columns and board.columns[0] == 0:
        return board
    return FerrersBoard((0,) + board.columns)


def is_m_restricted(board: FerrersBoard, m: int) -> bool:
    """b_(j+1) <= b_j + m for j >= 0, reading the board with b_0 = 0."""
    check_m(m)
    columns = with_leading_zero(board).columns
    return all(b <= a + m for a, b in zip(columns, columns[1:]))


def level_counts(board: FerrersBoard, m: int) -> list[int]:
    """Cells of B in levels 1, 2, ..., t."""
    check_m(m)
    if not board.size:
        return []
    top = -(-max(board.columns) // m)
    return [sum(max(0, min(b, i * m) - (i - 1) * m) for b in board.columns) for i in range(1, top + 1)]


def l_operator(board: FerrersBoard, m: int) -> FerrersBoard:
    return FerrersBoard(tuple(reversed(level_counts(board, m))))


def transpose(board: FerrersBoard) -> FerrersBoard:
    return l_operator(board, 1)


def triangular_board(n: int, m: int) -> FerrersBoard:
    check_m(m)
    if n < 1:
        raise InvalidParameterError(f"triangular board needs n >= 1, got {n}")
    return FerrersBoard(tuple(j * m for j in range(n)))


def trim(board: FerrersBoard) -> FerrersBoard:
    columns = board.columns
    start = 0
    while start < len(columns) and columns[start] == 0:
        start += 1
    return FerrersBoard(columns[start:])


def pad(board: FerrersBoard, n: int) -> FerrersBoard:
    """Prepend zero columns until the board has n columns."""
    if n < len(board):
        raise InvalidParameterError(f"cannot pad a {len(board)}-column board to {n} columns")
    return FerrersBoard((0,) * (n - len(board)) + board.columns)


def fits_in(board: FerrersBoard, n: int, m: int) -> bool:
    check_m(m)
    trimmed = trim(board)
    if n < 1 or len(trimmed) > n:
        return False
    return all(b <= j * m for j, b in enumerate(pad(trimmed, n).columns))


def _minimal_bounding_n_search(board: FerrersBoard, m: int) -> int:
    n = max(1, len(trim(board)))
    while not fits_in(board, n, m):
        n += 1
    return n


def minimal_bounding_n(board: FerrersBoard, m: int) -> int:
    """Smallest N with B inside the triangle of N columns and slope m."""
    check_m(m)
    size = board.size
    padded = pad(trim(board), size + 1).columns
    omega = [j * m - b for j, b in enumerate(padded)]
    leading = 0
    while leading + 1 < len(padded) and padded[leading + 1] == 0:
        leading += 1
    tail = omega[leading + 1 :]
    n = size + 1 - min(tail) // m if tail else 1
    searched = _minimal_bounding_n_search(board, m)
    if n != searched:
        raise ArithmeticError(f"bounding N formula gave {n}, search gave {searched} for {format_board(board)}")
    return n


def partitions_of(size: int) -> Iterator[FerrersBoard]:
    """All trimmed boards with `size` cells, lexicographic in their column tuples."""
    if size < 0:
        raise InvalidParameterError(f"size must be nonnegative, got {size}")
    if size == 0:
        yield FerrersBoard(())
        return
    boards = []
    for parts in partitions(size):
        columns: list[int] = []
        for part, multiplicity in sorted(parts.items()):
            columns.extend([part] * multiplicity)
        boards.append(tuple(columns))
    for columns in sorted(boards):
        yield FerrersBoard(columns)


def boards_up_to(max_cells: int) -> Iterator[FerrersBoard]:
    for size in range(max_cells + 1):
        yield from partitions_of(size)


def singleton_boards_up_to(max_cells: int, m: int) -> Iterator[FerrersBoard]:
    return (b for b in boards_up_to(max_cells) if is_singleton(b, m))

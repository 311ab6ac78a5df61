# rooks/equivalence.py
"""
Root vectors, equivalence tests, canonical representatives and class sizes.

Two root vectors are used:
  level  (zeta)   a_j = (j-1)m - floor_m(b_j) - [j last in zone] * rho_m(zone), j = 1..N
  weight (omega)  a_j = jm - b_j, j = 0..N-1, read with b_0 = 0

Boards are m-level (resp. m-weight) equivalent iff the vectors over a common
padding are rearrangements of each other.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Optional, Sequence

from rooks.board import (
    FerrersBoard,
    format_board,
    is_singleton,
    l_operator,
    m_floor,
    pad,
    partitions_of,
    trim,
    with_leading_zero,
    zones,
)
from rooks.errors import InvalidInputError, InvalidParameterError, check_m
from rooks.placement import f_vector, r_vector
from rooks.polynomial import multinomial

logger = logging.getLogger("rooks.equivalence")


class Relation(str, Enum):
    LEVEL = "level"
    WEIGHT = "weight"


@dataclass(frozen=True)
class RootVector:
    entries: tuple[int, ...]
    kind: Relation
    columns: int
    m: int

    def __len__(self) -> int:
        return len(self.entries)

    def sorted_entries(self) -> tuple[int, ...]:
        return tuple(sorted(self.entries))


@dataclass(frozen=True)
class MultiplicityProfile:
    """n_i = number of copies of i, for i = 0..max."""

    counts: tuple[int, ...]

    def n(self, value: int) -> int:
        return self.counts[value] if 0 <= value < len(self.counts) else 0

    @property
    def total(self) -> int:
        return sum(self.counts)


def multiplicity_profile(vector: Sequence[int]) -> MultiplicityProfile:
    if any(v < 0 for v in vector):
        raise InvalidInputError(f"multiplicity profile needs nonnegative entries, got {tuple(vector)}")
    if not vector:
        return MultiplicityProfile(())
    counter = Counter(vector)
    return MultiplicityProfile(tuple(counter.get(i, 0) for i in range(max(vector) + 1)))


def _pad_trimmed(board: FerrersBoard, columns: int) -> FerrersBoard:
    trimmed = trim(board)
    if columns < len(trimmed):
        raise InvalidParameterError(f"{format_board(board)} needs at least {len(trimmed)} columns, got {columns}")
    return pad(trimmed, columns)


def zeta(board: FerrersBoard, m: int, columns: Optional[int] = None) -> RootVector:
    check_m(m)
    padded = _pad_trimmed(board, len(board) if columns is None else columns)
    if is_singleton(padded, m):
        entries = [(j - 1) * m - b for j, b in enumerate(padded.columns, start=1)]
    else:
        entries = []
        for zone in zones(padded, m):
            for j in zone.columns:
                entry = (j - 1) * m - zone.floor_value
                if j == zone.end:
                    entry -= zone.remainder
                entries.append(entry)
    return RootVector(tuple(entries), Relation.LEVEL, len(padded), m)


def omega(board: FerrersBoard, m: int, columns: Optional[int] = None) -> RootVector:
    """jm - b_j over b_0, b_1, ...; by default a leading zero column is added when absent."""
    check_m(m)
    padded = _pad_trimmed(board, len(with_leading_zero(board)) if columns is None else columns)
    entries = tuple(j * m - b for j, b in enumerate(padded.columns))
    return RootVector(entries, Relation.WEIGHT, len(padded), m)


def equivalent_level(first: FerrersBoard, second: FerrersBoard, m: int) -> bool:
    columns = max(len(trim(first)), len(trim(second)))
    return zeta(first, m, columns).sorted_entries() == zeta(second, m, columns).sorted_entries()


def equivalent_weight(first: FerrersBoard, second: FerrersBoard, m: int) -> bool:
    columns = max(len(trim(first)), len(trim(second))) + 1
    return omega(first, m, columns).sorted_entries() == omega(second, m, columns).sorted_entries()


def validate_zeta_singleton(vector: Sequence[int], m: int) -> bool:
    """Whether the vector is the level root vector of a singleton board."""
    check_m(m)
    if not vector:
        return True
    if vector[0] != 0:
        return False
    for a, b in zip(vector, vector[1:]):
        if b > a + m:
            return False
        if m_floor(b, m) != b and m_floor(b, m) > m_floor(a, m):
            return False
    return True


def validate_omega(vector: Sequence[int], m: int) -> bool:
    check_m(m)
    if not vector:
        return True
    if vector[0] != 0:
        return False
    return all(b <= a + m for a, b in zip(vector, vector[1:]))


def board_from_zeta(vector: Sequence[int], m: int) -> FerrersBoard:
    return FerrersBoard(tuple((j - 1) * m - a for j, a in enumerate(vector, start=1)))


def board_from_omega(vector: Sequence[int], m: int) -> FerrersBoard:
    return FerrersBoard(tuple(j * m - a for j, a in enumerate(vector)))


# ---------------------------------------------------------------------------
# canonical representatives
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Construction:
    source: FerrersBoard
    m: int
    singleton_board: FerrersBoard
    columns: int
    root_vector: tuple[int, ...]
    rearranged: tuple[int, ...]
    representative: FerrersBoard


def m_increasing_construction(board: FerrersBoard, m: int) -> Construction:
    check_m(m)
    singleton = trim(board if is_singleton(board, m) else l_operator(board, m))
    columns = singleton.size + 1
    vector = zeta(singleton, m, columns).entries
    largest = max(v for v in vector if v % m == 0)
    prefix = [i * m for i in range(largest // m + 1)]
    rest = Counter(vector)
    rest.subtract(prefix)
    if any(count < 0 for count in rest.values()):
        raise ArithmeticError(f"root vector {vector} lacks the multiples 0..{largest}")
    rearranged = tuple(prefix + sorted(rest.elements(), reverse=True))
    representative = trim(board_from_zeta(rearranged, m))
    logger.debug("m-increasing %s m=%s: %s -> %s", format_board(board), m, vector, rearranged)
    return Construction(board, m, singleton, columns, vector, rearranged, representative)


def m_increasing_representative(board: FerrersBoard, m: int) -> FerrersBoard:
    return m_increasing_construction(board, m).representative


def m_restricted_construction(board: FerrersBoard, m: int) -> Construction:
    check_m(m)
    columns = board.size + 1
    vector = omega(board, m, columns).entries
    rearranged = tuple(sorted(vector))
    representative = trim(board_from_omega(rearranged, m))
    return Construction(board, m, trim(board), columns, vector, rearranged, representative)


def m_restricted_representative(board: FerrersBoard, m: int) -> FerrersBoard:
    return m_restricted_construction(board, m).representative


def m_restricted_singleton_representative(board: FerrersBoard, m: int) -> FerrersBoard:
    return trim(l_operator(m_increasing_representative(board, m), m))


# ---------------------------------------------------------------------------
# class sizes
# ---------------------------------------------------------------------------


def count_singleton_class(board: FerrersBoard, m: int) -> int:
    """Singleton boards m-level equivalent to a singleton board."""
    check_m(m)
    if not is_singleton(board, m):
        raise InvalidInputError(f"{format_board(board)} is not {m}-singleton")
    profile = multiplicity_profile(zeta(board, m, board.size + 1).entries)
    size = 1
    for i in range(len(profile.counts) // m + 1):
        head = profile.n(i * m)
        tail = [profile.n(i * m + j) for j in range(1, m + 1)]
        if head == 0:
            continue
        size *= multinomial(head - 1 + sum(tail), [head - 1] + tail)
    return size


def count_weight_class(board: FerrersBoard, m: int) -> int:
    check_m(m)
    profile = multiplicity_profile(omega(board, m, board.size + 1).entries)
    size = 1
    for i in range(1, len(profile.counts)):
        n_i = profile.n(i)
        if n_i == 0:
            continue
        size *= comb(n_i + sum(profile.n(i - j) for j in range(1, m + 1)) - 1, n_i)
    return size


def enumerate_class(board: FerrersBoard, m: int, relation: Relation | str) -> list[FerrersBoard]:
    """All trimmed boards sharing the r-vector (level) or f-vector (weight) of the board."""
    check_m(m)
    relation = Relation(relation)
    oracle = r_vector if relation is Relation.LEVEL else f_vector
    target = oracle(trim(board), m)
    members = [candidate for candidate in partitions_of(board.size) if oracle(candidate, m) == target]
    logger.debug("%s class of %s m=%s has %d members", relation.value, format_board(board), m, len(members))
    return members

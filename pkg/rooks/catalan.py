# rooks/catalan.py
"""
Boards inside the triangle with columns 0, m, 2m, ..., (n-1)m.

A bounded board is read as the lattice path from (0, 0) to (n, nm) that runs
along its upper boundary: column j contributes an E step at height b_j.
Statistics: area (cells between the board and the triangle), dinv (computed
from the weight root vector) and bounce (from the bounce path).
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Optional, Sequence

from rooks.board import FerrersBoard, fits_in, format_board, minimal_bounding_n, pad, trim
from rooks.equivalence import board_from_omega, enumerate_class, multiplicity_profile, omega
from rooks.errors import BounceError, InvalidInputError, InvalidParameterError, check_m
from rooks.placement import f_vector
from rooks.polynomial import Q_ONLY, QT, LaurentPoly, q_binomial

logger = logging.getLogger("rooks.catalan")

EAST = "E"
NORTH = "N"


def _check(n: int, m: int) -> None:
    check_m(m)
    if n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n}")


@dataclass(frozen=True)
class BoundedBoard:
    board: FerrersBoard
    n: int
    m: int

    def __post_init__(self) -> None:
        _check(self.n, self.m)
        if len(self.board) != self.n:
            raise InvalidInputError(f"bounded board needs exactly {self.n} columns, got {format_board(self.board)}")
        if not fits_in(self.board, self.n, self.m):
            raise InvalidInputError(f"{format_board(self.board)} does not fit in the triangle n={self.n} m={self.m}")

    @classmethod
    def of(cls, board: FerrersBoard, n: int, m: int) -> "BoundedBoard":
        trimmed = trim(board)
        if len(trimmed) > n:
            raise InvalidInputError(f"{format_board(board)} has more than {n} nonzero columns")
        return cls(pad(trimmed, n), n, m)

    @property
    def columns(self) -> tuple[int, ...]:
        return self.board.columns


def bounded_boards(n: int, m: int) -> Iterator[BoundedBoard]:
    """All boards in the triangle, lexicographic in their column tuples."""
    _check(n, m)

    def extend(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        j = len(prefix)
        if j == n:
            yield tuple(prefix)
            return
        low = prefix[-1] if prefix else 0
        for height in range(low, j * m + 1):
            prefix.append(height)
            yield from extend(prefix)
            prefix.pop()

    for columns in extend([]):
        yield BoundedBoard(FerrersBoard(columns), n, m)


def area(bounded: BoundedBoard) -> int:
    return sum(j * bounded.m - b for j, b in enumerate(bounded.columns))


def omega_of(bounded: BoundedBoard) -> tuple[int, ...]:
    return omega(bounded.board, bounded.m, bounded.n).entries


def dinv(vector: Sequence[int], m: int) -> int:
    """Sum over k = 0..m-1 of the pairs i < j with 0 <= a_i - a_j + k <= m."""
    total = 0
    for k in range(m):
        for i in range(len(vector)):
            for j in range(i + 1, len(vector)):
                if 0 <= vector[i] - vector[j] + k <= m:
                    total += 1
    return total


def pair_weight(d: int, m: int) -> int:
    if 0 < d <= m:
        return m - d + 1
    if -m <= d <= 0:
        return m + d
    return 0


def dinv_pairwise(vector: Sequence[int], m: int) -> int:
    return sum(pair_weight(vector[i] - vector[j], m) for i in range(len(vector)) for j in range(i + 1, len(vector)))


def dinv_board(bounded: BoundedBoard) -> int:
    return dinv(omega_of(bounded), bounded.m)


# ---------------------------------------------------------------------------
# paths
# ---------------------------------------------------------------------------


def boundary_path(bounded: BoundedBoard) -> str:
    steps = []
    height = 0
    for b in bounded.columns:
        steps.append(NORTH * (b - height))
        steps.append(EAST)
        height = b
    steps.append(NORTH * (bounded.n * bounded.m - height))
    return "".join(steps)


def board_from_path(word: str, n: int, m: int) -> BoundedBoard:
    _check(n, m)
    if word.count(EAST) != n or word.count(NORTH) != n * m or len(word) != n * (m + 1):
        raise InvalidInputError(f"path {word!r} is not a path from (0,0) to ({n},{n * m})")
    heights = []
    height = 0
    for step in word:
        if step == NORTH:
            height += 1
        else:
            heights.append(height)
    return BoundedBoard(FerrersBoard(tuple(heights)), n, m)


@dataclass(frozen=True)
class BouncePath:
    """Horizontal runs h_0..h_s (trailing zeros kept) and vertical runs v_i = h_i + ... + h_(i-m+1)."""

    h: tuple[int, ...]
    v: tuple[int, ...]
    n: int
    m: int

    def __post_init__(self) -> None:
        _check(self.n, self.m)
        if sum(self.h) != self.n or sum(self.v) != self.n * self.m:
            raise BounceError(f"runs h={self.h} v={self.v} do not end at ({self.n},{self.n * self.m})")
        if self.h and self.h[0] == 0:
            raise BounceError(f"bounce path h={self.h} starts with an empty run")
        for i, v_i in enumerate(self.v):
            if v_i != sum(self.h[max(0, i - self.m + 1) : i + 1]):
                raise BounceError(f"vertical run {i} of {self.v} breaks the run recurrence for h={self.h}")
        zeros = 0
        for h_i in self.h:
            zeros = zeros + 1 if h_i == 0 else 0
            if zeros >= self.m:
                raise BounceError(f"bounce path h={self.h} has {self.m} consecutive empty runs")

    @property
    def bounce(self) -> int:
        return sum(i * h_i for i, h_i in enumerate(self.h))

    @property
    def composition(self) -> tuple[int, ...]:
        h = list(self.h)
        while h and h[-1] == 0:
            h.pop()
        return tuple(h)

    def corners(self) -> list[tuple[int, int]]:
        """Lattice points where each horizontal run ends."""
        points = []
        x = y = 0
        for h_i, v_i in zip(self.h, self.v):
            x += h_i
            points.append((x, y))
            y += v_i
        return points


def bounce_path_from_composition(h: Sequence[int], n: int, m: int) -> BouncePath:
    runs = list(h)
    while runs and runs[-1] == 0:
        runs.pop()
    if runs:
        runs.extend([0] * (m - 1))
    vertical = [sum(runs[max(0, i - m + 1) : i + 1]) for i in range(len(runs))]
    return BouncePath(tuple(runs), tuple(vertical), n, m)


def bounce_path(bounded: BoundedBoard) -> BouncePath:
    """Bounce a ball from (0, 0): east until the next point would be interior to B, then north by v_i."""
    n, m = bounded.n, bounded.m
    columns = bounded.columns
    top = n * m
    limit = n + top
    h: list[int] = []
    v: list[int] = []
    x = y = 0
    while (x, y) != (n, top):
        run = 0
        # the point (x + 1, y) is interior iff y < b_x
        while x < n and y >= columns[x]:
            x += 1
            run += 1
        h.append(run)
        rise = sum(h[-m:])
        y += rise
        v.append(rise)
        if y > top or len(h) > limit:
            raise BounceError(f"bounce path of {format_board(bounded.board)} does not terminate at ({n},{top})")
    return BouncePath(tuple(h), tuple(v), n, m)


def bounce(bounded: BoundedBoard) -> int:
    return bounce_path(bounded).bounce


@dataclass(frozen=True)
class BounceRectangle:
    index: int
    southwest: tuple[int, int]
    northeast: tuple[int, int]

    @property
    def width(self) -> int:
        return self.northeast[0] - self.southwest[0]

    @property
    def height(self) -> int:
        return self.northeast[1] - self.southwest[1]


def bounce_rectangles(path: BouncePath) -> list[BounceRectangle]:
    """R_i spans from the start of vertical run i-1 to the end of horizontal run i."""
    corners = path.corners()
    rectangles = []
    for i in range(len(path.h) + 1):
        southwest = (0, 0) if i == 0 else corners[i - 1]
        northeast = corners[i] if i < len(path.h) else (path.n, path.n * path.m)
        rectangles.append(BounceRectangle(i, southwest, northeast))
    return rectangles


def phi(bounded: BoundedBoard) -> BoundedBoard:
    """Fill each bounce rectangle with the subword of omega on values i-m..i (i -> E, others -> N)."""
    n, m = bounded.n, bounded.m
    vector = omega_of(bounded)
    path = bounce_path_from_composition(multiplicity_profile(vector).counts, n, m)
    words = []
    for rectangle in bounce_rectangles(path):
        i = rectangle.index
        letters = [EAST if a == i else NORTH for a in vector if i - m <= a <= i]
        if letters.count(EAST) != rectangle.width or letters.count(NORTH) != rectangle.height:
            raise BounceError(f"subword {i} of omega={vector} does not fill its {rectangle.width}x{rectangle.height} rectangle")
        words.append("".join(letters))
    image = board_from_path("".join(words), n, m)
    logger.debug("phi %s -> %s", format_board(bounded.board), format_board(image.board))
    return image


# ---------------------------------------------------------------------------
# q,t-Catalan
# ---------------------------------------------------------------------------


def qt_catalan(n: int, m: int) -> LaurentPoly:
    """Sum of q^dinv t^area over the triangle."""
    counts: Counter[tuple[int, int]] = Counter(
        (dinv_board(bounded), area(bounded)) for bounded in bounded_boards(n, m)
    )
    return LaurentPoly(QT, dict(counts))


def qt_catalan_bounce(n: int, m: int) -> LaurentPoly:
    """Sum of q^area t^bounce over the triangle."""
    counts: Counter[tuple[int, int]] = Counter((area(bounded), bounce(bounded)) for bounded in bounded_boards(n, m))
    return LaurentPoly(QT, dict(counts))


def higher_catalan_number(n: int, m: int) -> int:
    _check(n, m)
    return comb((m + 1) * n, n) // (m * n + 1)


def lattice_path_count(n: int, m: int) -> int:
    """Paths from (0, 0) to (n, nm) with E and N steps whose E steps at column j sit at height <= jm."""
    _check(n, m)
    # ways[y] = paths reaching the current column boundary at height y
    ways = [1] + [0] * (n * m)
    for j in range(n):
        reached = [0] * (n * m + 1)
        running = 0
        for y in range(n * m + 1):
            running += ways[y]
            if y <= j * m:
                reached[y] = running
        ways = reached
    return sum(ways)


@lru_cache(maxsize=None)
def _compositions(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    results = []

    def extend(prefix: list[int], left: int, zeros: int) -> None:
        if left == 0:
            results.append(tuple(prefix))
            return
        for part in range(0 if prefix else 1, left + 1):
            run = zeros + 1 if part == 0 else 0
            if run >= m:
                continue
            prefix.append(part)
            extend(prefix, left - part, run)
            prefix.pop()

    extend([], n, 0)
    return tuple(results)


def bounce_compositions(n: int, m: int) -> list[tuple[int, ...]]:
    """Compositions of n with positive first and last parts and fewer than m zeros in a row."""
    _check(n, m)
    return list(_compositions(n, m))


# ---------------------------------------------------------------------------
# weight classes inside a triangle
# ---------------------------------------------------------------------------


def dinv_class_exponent(vector: Sequence[int], m: int) -> int:
    profile = multiplicity_profile(vector)
    exponent = m * sum(comb(c, 2) for c in profile.counts)
    for i in range(1, len(profile.counts)):
        exponent += profile.n(i) * sum((m - j) * profile.n(i - j) for j in range(1, m + 1))
    return exponent


def class_dinv_generating_function(board: FerrersBoard, n: int, m: int) -> LaurentPoly:
    """Sum of q^dinv over the weight class of the board, every member read with n columns."""
    _check(n, m)
    if not fits_in(board, n, m):
        raise InvalidInputError(f"{format_board(board)} does not fit in the triangle n={n} m={m}")
    vector = omega(board, m, n).entries
    profile = multiplicity_profile(vector)
    result = LaurentPoly(Q_ONLY, {(dinv_class_exponent(vector, m),): 1})
    for i in range(1, len(profile.counts)):
        n_i = profile.n(i)
        if n_i == 0:
            continue
        result = result * q_binomial(n_i + sum(profile.n(i - j) for j in range(1, m + 1)) - 1, n_i)
    return result


def class_dinv_bruteforce(board: FerrersBoard, n: int, m: int) -> LaurentPoly:
    counts: Counter[tuple[int]] = Counter(
        (dinv(omega(member, m, n).entries, m),) for member in enumerate_class(board, m, "weight")
    )
    return LaurentPoly(Q_ONLY, dict(counts))


def omega_hat(vector: Sequence[int], m: int) -> tuple[int, ...]:
    """Weakly increasing rearrangement (each value class inserted as far right as possible)."""
    return tuple(sorted(vector))


def omega_check(vector: Sequence[int], m: int) -> tuple[int, ...]:
    """Insert the copies of each value i, increasing in i, right after the leftmost entry >= i - m."""
    counts = multiplicity_profile(vector).counts
    built: list[int] = []
    for value, copies in enumerate(counts):
        if not copies:
            continue
        if not built:
            built = [value] * copies
            continue
        position = next((p for p, a in enumerate(built) if a >= value - m), None)
        if position is None:
            raise InvalidInputError(f"{tuple(vector)} is not a weight root vector for m={m}")
        built[position + 1 : position + 1] = [value] * copies
    return tuple(built)


def extremal_dinv_boards(board: FerrersBoard, m: int, n: Optional[int] = None) -> tuple[FerrersBoard, FerrersBoard]:
    """Members of the weight class with least and greatest dinv, as n-column boards."""
    n = minimal_bounding_n(board, m) if n is None else n
    if not fits_in(board, n, m):
        raise InvalidInputError(f"{format_board(board)} does not fit in the triangle n={n} m={m}")
    vector = omega(board, m, n).entries
    return board_from_omega(omega_hat(vector, m), m), board_from_omega(omega_check(vector, m), m)


def count_weight_classes_in_triangle(n: int, m: int) -> int:
    _check(n, m)
    return (m + 1) ** (n - 1)


def count_weight_classes_bruteforce(n: int, m: int) -> int:
    return len({f_vector(trim(bounded.board), m) for bounded in bounded_boards(n, m)})

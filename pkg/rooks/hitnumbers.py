# rooks/hitnumbers.py
"""
Hit numbers: how many full placements meet a board in exactly k cells.

classical   permutations of n (rooks on the n x n board)
m-level     m-level placements of n rooks on the mn x n board (m^n n! of them)
pq          the p,q-analogue, coefficients are Laurent polynomials in p, q
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from math import comb, factorial
from typing import Iterable, Optional, Union

from pydantic import BaseModel

from rooks.board import FerrersBoard, boards_up_to, format_board, pad, trim
from rooks.errors import InvalidInputError, InvalidParameterError, check_m
from rooks.placement import CellSetBoard, PlacementKind, enumerate_placements, pq_rook_vector, r_km
from rooks.polynomial import PQ, Q_ONLY, XPQ, IntPolynomial, LaurentPoly, falling_factorial_value, pq_falling_factorial

logger = logging.getLogger("rooks.hitnumbers")


class HitFlavor(str, Enum):
    CLASSICAL = "classical"
    M_LEVEL = "m-level"
    PQ = "pq"


@dataclass(frozen=True)
class HitVector:
    entries: tuple[Union[int, LaurentPoly], ...]
    flavor: HitFlavor
    n: int
    m: int = 1

    def __post_init__(self) -> None:
        if self.flavor is HitFlavor.CLASSICAL and sum(self.entries) != factorial(self.n):
            raise ArithmeticError(f"classical hit numbers {self.entries} do not sum to {self.n}!")
        if self.flavor is HitFlavor.M_LEVEL and sum(self.entries) != self.m**self.n * factorial(self.n):
            raise ArithmeticError(f"{self.m}-level hit numbers {self.entries} do not sum to m^n n!")

    def rendered(self) -> list[Union[int, str]]:
        return [e.render() if isinstance(e, LaurentPoly) else e for e in self.entries]


def _check_host(board: FerrersBoard, n: int, m: int) -> FerrersBoard:
    check_m(m)
    if n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n}")
    trimmed = trim(board)
    if len(trimmed) > n or (trimmed.columns and trimmed.columns[-1] > m * n):
        raise InvalidInputError(f"{format_board(board)} does not fit in the {m * n} x {n} board")
    return pad(trimmed, n)


def _expand_in_x_minus_one(weights: list[int]) -> tuple[int, ...]:
    """Coefficients in x of sum_k weights[k] (x - 1)^k."""
    total = IntPolynomial()
    for k, weight in enumerate(weights):
        if weight:
            total = total + IntPolynomial.linear(-1) ** k * weight
    return tuple(total.coefficient(k) for k in range(len(weights)))


def hit_numbers(board: FerrersBoard, n: int) -> HitVector:
    padded = _check_host(board, n, 1)
    weights = [r_km(padded, k, 1) * factorial(n - k) for k in range(n + 1)]
    return HitVector(_expand_in_x_minus_one(weights), HitFlavor.CLASSICAL, n, 1)


def m_level_hit_numbers(board: FerrersBoard, n: int, m: int) -> HitVector:
    padded = _check_host(board, n, m)
    weights = [r_km(padded, k, m) * falling_factorial_value(m * (n - k), n - k, m) for k in range(n + 1)]
    return HitVector(_expand_in_x_minus_one(weights), HitFlavor.M_LEVEL, n, m)


def _hits_by_enumeration(board: FerrersBoard, n: int, m: int) -> tuple[int, ...]:
    cells = CellSetBoard.from_ferrers(board).cells
    counts: Counter[int] = Counter()
    for placement in enumerate_placements(CellSetBoard.rectangle(n, m * n), n, PlacementKind.ROOK, m):
        counts[sum(1 for rook in placement.rooks if rook in cells)] += 1
    return tuple(counts.get(k, 0) for k in range(n + 1))


def hit_numbers_bruteforce(board: FerrersBoard, n: int) -> HitVector:
    padded = _check_host(board, n, 1)
    return HitVector(_hits_by_enumeration(padded, n, 1), HitFlavor.CLASSICAL, n, 1)


def m_level_hit_numbers_bruteforce(board: FerrersBoard, n: int, m: int) -> HitVector:
    padded = _check_host(board, n, m)
    return HitVector(_hits_by_enumeration(padded, n, m), HitFlavor.M_LEVEL, n, m)


def _xpq(x: int = 0, p: int = 0, q: int = 0, coefficient: int = 1) -> LaurentPoly:
    return LaurentPoly(XPQ, {(x, p, q): coefficient})


def pq_hit_numbers(board: FerrersBoard, n: int, m: int) -> HitVector:
    padded = _check_host(board, n, m)
    total = LaurentPoly.zero(XPQ)
    for k, r_k in enumerate(pq_rook_vector(padded, m)):
        if r_k.is_zero():
            continue
        term = r_k.extend(XPQ) * pq_falling_factorial(m * (n - k), n - k, m).extend(XPQ)
        term = term * _xpq(p=m * (comb(k + 1, 2) + k * (n - k)))
        for level in range(n - k + 1, n + 1):
            term = term * (_xpq(x=1) - _xpq(q=m * level, p=m * (n - level)))
        total = total + term
    by_degree = total.coefficients_in("x")
    entries = tuple(by_degree.get(k, LaurentPoly.zero(PQ)) for k in range(n + 1))
    return HitVector(entries, HitFlavor.PQ, n, m)


def specialize_p1(entry: LaurentPoly) -> LaurentPoly:
    return entry.substitute({"p": 1}, Q_ONLY)


class ScanRecord(BaseModel):
    board: str
    n: int
    m: int
    specialize_p1: bool
    negative_found: bool
    witness: Optional[str] = None


def scan_board(board: FerrersBoard, n: int, m: int, p_equals_one: bool = False) -> ScanRecord:
    hits = pq_hit_numbers(board, n, m)
    witness = None
    for k, entry in enumerate(hits.entries):
        if p_equals_one:
            entry = specialize_p1(entry)
        negatives = entry.negative_terms()
        if negatives:
            exponents, coefficient = negatives[0]
            monomial = entry.monomial_text(exponents) or "1"
            witness = f"h_{k}: {coefficient}*{monomial}"
            break
    return ScanRecord(
        board=format_board(board),
        n=n,
        m=m,
        specialize_p1=p_equals_one,
        negative_found=witness is not None,
        witness=witness,
    )


def positivity_scan(boards: Iterable[FerrersBoard], n: int, m: int, p_equals_one: bool = False) -> list[ScanRecord]:
    records = [scan_board(board, n, m, p_equals_one) for board in boards]
    logger.debug("positivity scan n=%s m=%s: %d boards, %d negative", n, m, len(records), sum(r.negative_found for r in records))
    return records


def boards_in_host(n: int, m: int, max_cells: Optional[int] = None) -> list[FerrersBoard]:
    """Trimmed boards that fit in the mn x n board, optionally capped in size."""
    cap = m * n * n if max_cells is None else max_cells
    return [b for b in boards_up_to(cap) if len(b) <= n and (not b.columns or b.columns[-1] <= m * n)]

# rooks/factorization.py
"""
Product sides of the factorization theorems, checked against brute-force counts.

verify_* functions never assume the identity they check: a failing board is
reported with match=False.
"""
from __future__ import annotations

import logging
from math import comb
from typing import Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict

from rooks.board import FerrersBoard, format_board, is_singleton, pad, remainder, zones
from rooks.errors import InvalidInputError, InvalidParameterError, check_m
from rooks.placement import f_km, pq_rook_vector, r_km
from rooks.polynomial import (
    PQ,
    PQ_FORMAL,
    IntPolynomial,
    LaurentPoly,
    pq_bracket,
    pq_falling_factorial,
    to_falling_basis,
)

logger = logging.getLogger("rooks.factorization")


class FactorizationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    theorem: str
    board: str
    m: int
    depth: int
    padding: int = 0
    mode: Optional[str] = None
    x_values: list[int] = []
    factors: list[str]
    sum_side_coefficients: list[Union[int, str]]
    product_side_coefficients: list[Union[int, str]]
    match: bool


def _padded(board: FerrersBoard, columns: Optional[int]) -> FerrersBoard:
    return board if columns is None else pad(board, columns)


def _linear_text(offset: int) -> str:
    if offset == 0:
        return "x"
    return f"x + {offset}" if offset > 0 else f"x - {-offset}"


def mft_offsets(board: FerrersBoard, m: int) -> list[int]:
    """a_j with the j-th factor equal to x + a_j."""
    check_m(m)
    offsets = []
    for zone in zones(board, m):
        for j in zone.columns:
            offset = zone.floor_value - (j - 1) * m
            if j == zone.end:
                offset += zone.remainder
            offsets.append(offset)
    return offsets


def mft_product(board: FerrersBoard, m: int) -> IntPolynomial:
    return IntPolynomial.product(IntPolynomial.linear(a) for a in mft_offsets(board, m))


def singleton_offsets(board: FerrersBoard, m: int) -> list[int]:
    check_m(m)
    return [b - (j - 1) * m for j, b in enumerate(board.columns, start=1)]


def singleton_product(board: FerrersBoard, m: int) -> IntPolynomial:
    """prod (x + b_j - (j-1)m); the weighted product, and the level product on singleton boards."""
    return IntPolynomial.product(IntPolynomial.linear(a) for a in singleton_offsets(board, m))


mwft_product = singleton_product


def gjw_product(board: FerrersBoard) -> IntPolynomial:
    return singleton_product(board, 1)


def _integer_report(
    theorem: str, board: FerrersBoard, padded: FerrersBoard, m: int, offsets: Sequence[int], sums: list[int]
) -> FactorizationReport:
    depth = len(padded)
    product = IntPolynomial.product(IntPolynomial.linear(a) for a in offsets)
    expansion = to_falling_basis(product, m, depth)
    match = list(expansion.coefficients) == sums
    if not match:
        logger.debug("%s mismatch on %s m=%s: %s vs %s", theorem, format_board(board), m, sums, expansion.coefficients)
    return FactorizationReport(
        theorem=theorem,
        board=format_board(board),
        m=m,
        depth=depth,
        padding=len(padded) - len(board),
        factors=[_linear_text(a) for a in offsets],
        sum_side_coefficients=sums,
        product_side_coefficients=list(expansion.coefficients),
        match=match,
    )


def verify_mft(board: FerrersBoard, m: int, columns: Optional[int] = None) -> FactorizationReport:
    padded = _padded(board, columns)
    sums = [r_km(padded, k, m) for k in range(len(padded) + 1)]
    return _integer_report("mft", board, padded, m, mft_offsets(padded, m), sums)


def verify_mwft(board: FerrersBoard, m: int, columns: Optional[int] = None) -> FactorizationReport:
    padded = _padded(board, columns)
    sums = [f_km(padded, k, m) for k in range(len(padded) + 1)]
    return _integer_report("mwft", board, padded, m, singleton_offsets(padded, m), sums)


# ---------------------------------------------------------------------------
# p,q version
# ---------------------------------------------------------------------------


def _pq(p: int, q: int, coefficient: int = 1) -> LaurentPoly:
    return LaurentPoly(PQ, {(p, q): coefficient})


def _formal(p: int = 0, q: int = 0, big_p: int = 0, big_q: int = 0, coefficient: int = 1) -> LaurentPoly:
    return LaurentPoly(PQ_FORMAL, {(p, q, big_p, big_q): coefficient})


def _cleared_bracket(a: int) -> LaurentPoly:
    """(p - q)[x + a] with P = p^x, Q = q^x."""
    return _formal(p=a, big_p=1) - _formal(q=a, big_q=1)


def _p_minus_q(variables: Sequence[str]) -> LaurentPoly:
    return LaurentPoly.variable(variables, "p") - LaurentPoly.variable(variables, "q")


def _check_x(x: int, m: int) -> None:
    if x < 0 or x % m:
        raise InvalidParameterError(f"x={x} is not a nonnegative multiple of m={m}")


def pq_factor_texts(board: FerrersBoard, m: int) -> list[str]:
    texts = []
    for zone in zones(board, m):
        for j in zone.columns:
            a = zone.floor_value - (j - 1) * m
            bracket = f"[{_linear_text(a)}]"
            if j == zone.end and zone.remainder:
                texts.append(f"q^{zone.remainder}{bracket} + zone({zone.start}..{zone.end})")
            else:
                texts.append(bracket)
    return texts


def pq_product_side(board: FerrersBoard, m: int, x: int) -> LaurentPoly:
    check_m(m)
    _check_x(x, m)
    result = LaurentPoly.one(PQ)
    for zone in zones(board, m):
        for j in zone.columns:
            a = zone.floor_value - (j - 1) * m
            if j != zone.end:
                result = result * pq_bracket(x + a)
                continue
            factor = _pq(0, zone.remainder) * pq_bracket(x + a)
            for i in zone.columns:
                a_i = zone.floor_value - (i - 1) * m
                rho_before = zone.partial_remainders[i - zone.start]
                factor = factor + _pq(x + a_i, rho_before) * pq_bracket(remainder(board.height(i), m))
            result = result * factor
    return result


def pq_sum_side(board: FerrersBoard, m: int, x: int) -> LaurentPoly:
    check_m(m)
    _check_x(x, m)
    n = len(board)
    total = LaurentPoly.zero(PQ)
    for k, r_k in enumerate(pq_rook_vector(board, m)):
        if r_k.is_zero():
            continue
        total = total + _pq(x * k + m * comb(k + 1, 2), 0) * r_k * pq_falling_factorial(x, n - k, m)
    return total


def cleared_product_side(board: FerrersBoard, m: int) -> LaurentPoly:
    """(p - q)^n times the product side, over p, q, P = p^x, Q = q^x."""
    check_m(m)
    result = LaurentPoly.one(PQ_FORMAL)
    for zone in zones(board, m):
        for j in zone.columns:
            a = zone.floor_value - (j - 1) * m
            if j != zone.end:
                result = result * _cleared_bracket(a)
                continue
            factor = _formal(q=zone.remainder) * _cleared_bracket(a)
            for i in zone.columns:
                a_i = zone.floor_value - (i - 1) * m
                rho_before = zone.partial_remainders[i - zone.start]
                rho_i = remainder(board.height(i), m)
                factor = factor + _formal(p=a_i, q=rho_before, big_p=1) * (_formal(p=rho_i) - _formal(q=rho_i))
            result = result * factor
    return result


def cleared_sum_side(board: FerrersBoard, m: int) -> LaurentPoly:
    check_m(m)
    n = len(board)
    p_minus_q = _p_minus_q(PQ_FORMAL)
    total = LaurentPoly.zero(PQ_FORMAL)
    for k, r_k in enumerate(pq_rook_vector(board, m)):
        if r_k.is_zero():
            continue
        term = _formal(p=m * comb(k + 1, 2), big_p=k) * r_k.extend(PQ_FORMAL) * p_minus_q**k
        for i in range(n - k):
            term = term * (_formal(p=-i * m, big_p=1) - _formal(q=-i * m, big_q=1))
        total = total + term
    return total


def specialize(cleared: LaurentPoly, x: int) -> LaurentPoly:
    """Set P = p^x and Q = q^x in a cleared side."""
    return cleared.substitute({"P": _pq(x, 0), "Q": _pq(0, x)}, PQ)


def verify_pqmft(
    board: FerrersBoard,
    m: int,
    mode: str = "symbolic",
    x_values: Optional[Sequence[int]] = None,
    columns: Optional[int] = None,
) -> FactorizationReport:
    check_m(m)
    padded = _padded(board, columns)
    if mode == "symbolic":
        sum_side = cleared_sum_side(padded, m)
        product_side = cleared_product_side(padded, m)
        sums: list[Union[int, str]] = [sum_side.render()]
        products: list[Union[int, str]] = [product_side.render()]
        match = sum_side == product_side
        xs: list[int] = []
    elif mode == "numeric":
        xs = list(x_values) if x_values is not None else [0, m, 2 * m]
        if not xs:
            raise InvalidParameterError("numeric mode needs at least one x value")
        for x in xs:
            _check_x(x, m)
        sum_sides = [pq_sum_side(padded, m, x) for x in xs]
        product_sides = [pq_product_side(padded, m, x) for x in xs]
        sums = [s.render() for s in sum_sides]
        products = [p.render() for p in product_sides]
        match = sum_sides == product_sides
    else:
        raise InvalidParameterError(f"unknown mode {mode!r}; expected 'symbolic' or 'numeric'")
    if not match:
        logger.debug("pqmft mismatch on %s m=%s (%s)", format_board(board), m, mode)
    return FactorizationReport(
        theorem="pqmft",
        board=format_board(board),
        m=m,
        depth=len(padded),
        padding=len(padded) - len(board),
        mode=mode,
        x_values=xs,
        factors=pq_factor_texts(padded, m),
        sum_side_coefficients=sums,
        product_side_coefficients=products,
        match=match,
    )


def pq_singleton_check(board: FerrersBoard, m: int, x: int) -> bool:
    """On singleton boards the product side collapses to prod [x + b_j - (j-1)m]."""
    if not is_singleton(board, m):
        raise InvalidInputError(f"{format_board(board)} is not {m}-singleton")
    expected = LaurentPoly.one(PQ)
    for a in singleton_offsets(board, m):
        expected = expected * pq_bracket(x + a)
    return pq_product_side(board, m, x) == expected

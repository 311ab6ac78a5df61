# rooks/suites.py
"""
Exhaustive invariant suites run by the sweep command.

Each suite walks every case inside the sweep bounds and records the cases
whose identity fails. Nothing is sampled, so two runs with the same bounds
produce the same report.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Optional

from pydantic import BaseModel

from rooks.board import (
    FerrersBoard,
    boards_up_to,
    fits_in,
    format_board,
    is_m_increasing,
    is_m_restricted,
    is_singleton,
    l_operator,
    level_counts,
    minimal_bounding_n,
    partitions_of,
    remainder,
    trim,
    zones,
)
from rooks.catalan import (
    area,
    bounce,
    bounce_compositions,
    bounce_path,
    bounded_boards,
    class_dinv_bruteforce,
    class_dinv_generating_function,
    count_weight_classes_bruteforce,
    count_weight_classes_in_triangle,
    dinv,
    dinv_board,
    dinv_pairwise,
    extremal_dinv_boards,
    higher_catalan_number,
    lattice_path_count,
    omega_of,
    phi,
    qt_catalan,
    qt_catalan_bounce,
)
from rooks.equivalence import (
    count_singleton_class,
    count_weight_class,
    enumerate_class,
    equivalent_level,
    equivalent_weight,
    m_increasing_representative,
    m_restricted_representative,
    m_restricted_singleton_representative,
    multiplicity_profile,
    omega,
)
from rooks.factorization import mft_product, specialize, cleared_product_side, pq_sum_side, verify_mft, verify_mwft, verify_pqmft
from rooks.hitnumbers import (
    boards_in_host,
    hit_numbers,
    hit_numbers_bruteforce,
    m_level_hit_numbers,
    m_level_hit_numbers_bruteforce,
    pq_hit_numbers,
)
from rooks.placement import (
    PlacementKind,
    enumerate_placements,
    f_km,
    f_vector,
    permutations_pq_generating_function,
    placement_stats,
    pq_rook_poly,
    r_km,
    r_vector,
)
from rooks.polynomial import PQ, LaurentPoly, falling_factorial, pq_factorial, q_binomial, q_factorial, to_falling_basis

logger = logging.getLogger("rooks.suites")

# witnesses kept per suite
MAX_WITNESSES = 5


@dataclass(frozen=True)
class SweepBounds:
    max_cells: int = 8
    m_max: int = 3
    n_max: int = 4

    @property
    def ms(self) -> range:
        return range(1, self.m_max + 1)

    def boards(self, cap: Optional[int] = None) -> list[FerrersBoard]:
        return list(boards_up_to(self.max_cells if cap is None else min(cap, self.max_cells)))

    def triangles(self) -> list[tuple[int, int]]:
        return [(n, m) for n in range(1, self.n_max + 1) for m in self.ms]

    def hosts(self) -> list[tuple[int, int]]:
        return [(n, m) for n in range(1, self.n_max + 1) for m in self.ms if n * m <= 8]


class SuiteResult(BaseModel):
    name: str
    checked: int
    failure_count: int
    failures: list[str]
    passed: bool


class SweepReport(BaseModel):
    max_cells: int
    m_max: int
    n_max: int
    suites: list[SuiteResult]
    passed: bool


class _Tally:
    def __init__(self) -> None:
        self.checked = 0
        self.failure_count = 0
        self.failures: list[str] = []

    def check(self, ok: bool, witness: str) -> None:
        self.checked += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_WITNESSES:
                self.failures.append(witness)


SuiteFn = Callable[[SweepBounds, _Tally], None]
SUITES: dict[str, SuiteFn] = {}


def suite(name: str) -> Callable[[SuiteFn], SuiteFn]:
    def register(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn

    return register


def _b(board: FerrersBoard) -> str:
    return f"({format_board(board)})"


# ---------------------------------------------------------------------------
# boards
# ---------------------------------------------------------------------------


@suite("zones")
def _zones(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            found = zones(board, m)
            covered = [j for z in found for j in z.columns]
            increasing = all(a.floor_value < b.floor_value for a, b in zip(found, found[1:]))
            sums = all(z.remainder == sum(remainder(board.height(j), m) for j in z.columns) for z in found)
            tally.check(covered == list(range(1, len(board) + 1)) and increasing and sums, f"{_b(board)} m={m}")


@suite("singleton-zones")
def _singleton_zones(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            per_zone = all(sum(1 for j in z.columns if board.height(j) % m) <= 1 for z in zones(board, m))
            tally.check(is_singleton(board, m) == per_zone, f"{_b(board)} m={m}")


@suite("l-operator")
def _l_operator(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            image = l_operator(board, m)
            tally.check(is_singleton(image, m) and image.size == board.size, f"{_b(board)} m={m}")


@suite("l-involution")
def _l_involution(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            if is_singleton(board, m):
                tally.check(l_operator(l_operator(board, m), m) == trim(board), f"{_b(board)} m={m}")


@suite("l-exchange")
def _l_exchange(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            image = l_operator(board, m)
            if is_m_restricted(board, m):
                tally.check(is_m_increasing(image, m), f"restricted {_b(board)} m={m}")
            if is_m_increasing(board, m):
                tally.check(is_m_restricted(image, m), f"increasing {_b(board)} m={m}")


@suite("bounding-n")
def _bounding_n(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            n = minimal_bounding_n(board, m)
            tally.check(fits_in(board, n, m) and not fits_in(board, n - 1, m), f"{_b(board)} m={m} N={n}")


# ---------------------------------------------------------------------------
# polynomials and placements
# ---------------------------------------------------------------------------


@suite("falling-basis")
def _falling_basis(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            polynomial = mft_product(board, m)
            expansion = to_falling_basis(polynomial, m, len(board))
            tally.check(expansion.to_polynomial() == polynomial, f"{_b(board)} m={m}")
    for depth in range(bounds.max_cells + 1):
        for m in bounds.ms:
            basis = falling_factorial(depth, m)
            tally.check(to_falling_basis(basis, m, depth).coefficients == (1,) + (0,) * depth, f"basis depth={depth} m={m}")


@suite("q-binomial")
def _q_binomial(bounds: SweepBounds, tally: _Tally) -> None:
    for n in range(bounds.max_cells + 3):
        for k in range(n + 1):
            ok = q_binomial(n, k) * q_factorial(k) * q_factorial(n - k) == q_factorial(n)
            tally.check(ok, f"[{n} choose {k}]")


@suite("rook-file")
def _rook_file(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for k in range(len(board) + 1):
            tally.check(r_km(board, k, 1) == f_km(board, k, 1), f"{_b(board)} k={k}")


@suite("pq-rook-specialization")
def _pq_rook_specialization(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards(8):
        for m in bounds.ms:
            for k in range(len(board) + 1):
                value = pq_rook_poly(board, k, m).evaluate({"p": 1, "q": 1})
                tally.check(value == r_km(board, k, m), f"{_b(board)} k={k} m={m}")


@suite("placement-stats")
def _placement_stats(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards(6):
        for m in bounds.ms:
            for k in range(len(board) + 1):
                for placement in enumerate_placements(board, k, PlacementKind.ROOK, m):
                    stats = placement_stats(placement, board, m)
                    label = f"{_b(board)} {placement.rooks} m={m}"
                    tally.check(stats.inv_decomposes(), f"inv {label}")
                    tally.check(stats.coinv_decomposes(), f"coinv {label}")


@suite("rodrigues")
def _rodrigues(bounds: SweepBounds, tally: _Tally) -> None:
    for n in range(min(bounds.n_max + 2, 6) + 1):
        tally.check(permutations_pq_generating_function(n) == pq_factorial(n), f"n={n}")


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------


@suite("mft")
def _mft(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            tally.check(verify_mft(board, m).match, f"{_b(board)} m={m}")


@suite("mwft")
def _mwft(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            tally.check(verify_mwft(board, m).match, f"{_b(board)} m={m}")


@suite("pqmft")
def _pqmft(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards(7):
        for m in bounds.ms:
            tally.check(verify_pqmft(board, m, "symbolic").match, f"{_b(board)} m={m} symbolic")
            cleared = cleared_product_side(board, m)
            p_minus_q = LaurentPoly.variable(PQ, "p") - LaurentPoly.variable(PQ, "q")
            for x in (0, m, 2 * m):
                numeric = pq_sum_side(board, m, x) * p_minus_q ** len(board)
                tally.check(specialize(cleared, x) == numeric, f"{_b(board)} m={m} x={x}")


# ---------------------------------------------------------------------------
# equivalence
# ---------------------------------------------------------------------------


def _same_size_pairs(bounds: SweepBounds) -> Iterable[tuple[FerrersBoard, FerrersBoard]]:
    for size in range(bounds.max_cells + 1):
        yield from combinations(list(partitions_of(size)), 2)


@suite("level-equivalence")
def _level_equivalence(bounds: SweepBounds, tally: _Tally) -> None:
    for first, second in _same_size_pairs(bounds):
        for m in bounds.ms:
            oracle = r_vector(first, m) == r_vector(second, m)
            tally.check(equivalent_level(first, second, m) == oracle, f"{_b(first)} {_b(second)} m={m}")


@suite("weight-equivalence")
def _weight_equivalence(bounds: SweepBounds, tally: _Tally) -> None:
    for first, second in _same_size_pairs(bounds):
        for m in bounds.ms:
            oracle = f_vector(first, m) == f_vector(second, m)
            tally.check(equivalent_weight(first, second, m) == oracle, f"{_b(first)} {_b(second)} m={m}")


@suite("increasing-representative")
def _increasing(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            rep = m_increasing_representative(board, m)
            others = [b for b in enumerate_class(board, m, "level") if is_m_increasing(b, m) and b != rep]
            ok = is_m_increasing(rep, m) and r_vector(rep, m) == r_vector(board, m) and not others
            tally.check(ok, f"{_b(board)} m={m} -> {_b(rep)}")


@suite("restricted-representative")
def _restricted(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            rep = m_restricted_representative(board, m)
            others = [b for b in enumerate_class(board, m, "weight") if is_m_restricted(b, m) and b != rep]
            ok = is_m_restricted(rep, m) and f_vector(rep, m) == f_vector(board, m) and not others
            tally.check(ok, f"{_b(board)} m={m} -> {_b(rep)}")


@suite("restricted-singleton-representative")
def _restricted_singleton(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            rep = m_restricted_singleton_representative(board, m)
            ok = is_singleton(rep, m) and is_m_restricted(rep, m) and r_vector(rep, m) == r_vector(board, m)
            tally.check(ok, f"{_b(board)} m={m} -> {_b(rep)}")


@suite("singleton-class")
def _singleton_class(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            if not is_singleton(board, m):
                continue
            members = [b for b in enumerate_class(board, m, "level") if is_singleton(b, m)]
            tally.check(count_singleton_class(board, m) == len(members), f"{_b(board)} m={m}")


@suite("weight-class")
def _weight_class(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            members = enumerate_class(board, m, "weight")
            n = minimal_bounding_n(board, m)
            tally.check(count_weight_class(board, m) == len(members), f"size {_b(board)} m={m}")
            tally.check(all(fits_in(b, n, m) for b in members), f"bounding {_b(board)} m={m} N={n}")


@suite("class-qgen")
def _class_qgen(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            n = minimal_bounding_n(board, m)
            formula = class_dinv_generating_function(board, n, m)
            tally.check(formula == class_dinv_bruteforce(board, n, m), f"{_b(board)} m={m} N={n}")


@suite("extremal-dinv")
def _extremal_dinv(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            n = minimal_bounding_n(board, m)
            low, high = extremal_dinv_boards(board, m, n)
            members = enumerate_class(board, m, "weight")
            values = sorted(dinv(omega(b, m, n).entries, m) for b in members)
            low_value = dinv(omega(low, m, n).entries, m)
            high_value = dinv(omega(high, m, n).entries, m)
            in_class = trim(low) in members and trim(high) in members
            unique = values.count(values[0]) == 1 and values.count(values[-1]) == 1
            tally.check(in_class and unique and low_value == values[0] and high_value == values[-1], f"{_b(board)} m={m}")


# ---------------------------------------------------------------------------
# catalan
# ---------------------------------------------------------------------------


@suite("phi")
def _phi(bounds: SweepBounds, tally: _Tally) -> None:
    for n, m in bounds.triangles():
        images = set()
        total = 0
        for bounded in bounded_boards(n, m):
            total += 1
            image = phi(bounded)
            images.add(image.columns)
            exchange = area(bounded) == bounce(image) and dinv_board(bounded) == area(image)
            profile = multiplicity_profile(omega_of(bounded)).counts
            h_matches = bounce_path(image).composition == profile
            tally.check(exchange and h_matches, f"{_b(bounded.board)} n={n} m={m}")
        tally.check(len(images) == total, f"phi not injective n={n} m={m}")


@suite("qt-catalan")
def _qt_catalan(bounds: SweepBounds, tally: _Tally) -> None:
    for n, m in bounds.triangles():
        dinv_form = qt_catalan(n, m)
        tally.check(dinv_form == qt_catalan_bounce(n, m), f"forms n={n} m={m}")
        count = dinv_form.evaluate({"q": 1, "t": 1})
        tally.check(count == higher_catalan_number(n, m) == lattice_path_count(n, m), f"count n={n} m={m}")


@suite("dinv-formulas")
def _dinv_formulas(bounds: SweepBounds, tally: _Tally) -> None:
    for m in bounds.ms:
        for length in range(5):
            for vector in product(range(-2, 4), repeat=length):
                tally.check(dinv(vector, m) == dinv_pairwise(vector, m), f"{vector} m={m}")


@suite("dinv-swap")
def _dinv_swap(bounds: SweepBounds, tally: _Tally) -> None:
    for n, m in bounds.triangles():
        for bounded in bounded_boards(n, m):
            vector = omega_of(bounded)
            before = dinv(vector, m)
            for i in range(len(vector) - 1):
                gap = vector[i] - vector[i + 1]
                if gap <= 0:
                    continue
                swapped = vector[:i] + (vector[i + 1], vector[i]) + vector[i + 2 :]
                after = dinv(swapped, m)
                ok = after < before if gap <= m else after == before
                tally.check(ok, f"{vector} swap {i} m={m}")


@suite("triangle-classes")
def _triangle_classes(bounds: SweepBounds, tally: _Tally) -> None:
    for n, m in bounds.triangles():
        expected = count_weight_classes_in_triangle(n, m)
        ok = count_weight_classes_bruteforce(n, m) == expected == len(bounce_compositions(n, m))
        tally.check(ok, f"n={n} m={m}")


# ---------------------------------------------------------------------------
# hit numbers
# ---------------------------------------------------------------------------


@suite("hit-sums")
def _hit_sums(bounds: SweepBounds, tally: _Tally) -> None:
    for n, m in bounds.hosts():
        for board in boards_in_host(n, m, bounds.max_cells):
            if m == 1:
                tally.check(hit_numbers(board, n) == hit_numbers_bruteforce(board, n), f"{_b(board)} n={n}")
            formula = m_level_hit_numbers(board, n, m)
            tally.check(formula == m_level_hit_numbers_bruteforce(board, n, m), f"{_b(board)} n={n} m={m}")


@suite("pq-hit-specialization")
def _pq_hit_specialization(bounds: SweepBounds, tally: _Tally) -> None:
    for n, m in bounds.hosts():
        if n > 3:
            continue
        for board in boards_in_host(n, m, min(bounds.max_cells, 6)):
            values = tuple(e.evaluate({"p": 1, "q": 1}) for e in pq_hit_numbers(board, n, m).entries)
            tally.check(values == m_level_hit_numbers(board, n, m).entries, f"{_b(board)} n={n} m={m}")


@suite("singleton-hit-positivity")
def _singleton_hit_positivity(bounds: SweepBounds, tally: _Tally) -> None:
    for n, m in bounds.hosts():
        if n > 3:
            continue
        for board in boards_in_host(n, m, min(bounds.max_cells, 6)):
            if not is_singleton(board, m):
                continue
            entries = pq_hit_numbers(board, n, m).entries
            tally.check(not any(e.negative_terms() for e in entries), f"{_b(board)} n={n} m={m}")


@suite("level-counts")
def _level_counts(bounds: SweepBounds, tally: _Tally) -> None:
    for board in bounds.boards():
        for m in bounds.ms:
            counts = level_counts(board, m)
            tally.check(sum(counts) == board.size and all(counts), f"{_b(board)} m={m}")


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------


def run_suite(name: str, bounds: SweepBounds) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    tally = _Tally()
    try:
        SUITES[name](bounds, tally)
    except Exception as exc:
        logger.exception("suite %s raised", name)
        tally.failure_count += 1
        tally.failures.append(f"error: {exc}")
    logger.debug("suite %s: %d checked, %d failed", name, tally.checked, tally.failure_count)
    return SuiteResult(
        name=name,
        checked=tally.checked,
        failure_count=tally.failure_count,
        failures=tally.failures,
        passed=tally.failure_count == 0,
    )


def run_sweep(bounds: SweepBounds, names: Optional[list[str]] = None, workers: int = 1) -> SweepReport:
    names = list(SUITES) if not names or names == ["all"] else names
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suites {unknown}")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_suite, names, [bounds] * len(names)))
    else:
        results = [run_suite(name, bounds) for name in names]
    return SweepReport(
        max_cells=bounds.max_cells,
        m_max=bounds.m_max,
        n_max=bounds.n_max,
        suites=results,
        passed=all(r.passed for r in results),
    )

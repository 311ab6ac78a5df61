import pytest
from hypothesis import given

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
    m_floor,
    minimal_bounding_n,
    pad,
    parse_board,
    partitions_of,
    remainder,
    singleton_boards_up_to,
    transpose,
    triangular_board,
    trim,
    zones,
)
from rooks.equivalence import zeta
from rooks.errors import InvalidInputError, InvalidParameterError, check_m
from rooks.hitnumbers import m_level_hit_numbers
from rooks.placement import r_vector
from rooks.polynomial import falling_factorial
from tests.strategies import boards, levels


def B(*heights):
    return FerrersBoard(heights)


class TestParsing:
    def test_parse_and_format(self):
        assert parse_board(" 1, 3,3 ") == B(1, 3, 3)
        assert format_board(B(0, 2, 4)) == "0,2,4"
        assert parse_board("") == B()

    @pytest.mark.parametrize("text", ["1,a", "1,-2", "3,1", "1,,2"])
    def test_rejects_bad_boards(self, text):
        with pytest.raises(InvalidInputError):
            parse_board(text)


class TestFloors:
    @pytest.mark.parametrize("n, m, expected", [(17, 3, 15), (6, 3, 6), (-1, 2, -2), (0, 4, 0)])
    def test_m_floor(self, n, m, expected):
        assert m_floor(n, m) == expected

    def test_m_floor_rejects_nonpositive_m(self):
        with pytest.raises(InvalidParameterError):
            m_floor(5, 0)

    @pytest.mark.parametrize("m", [0, -2, 2.0, "2"])
    def test_check_m_rejects(self, m):
        with pytest.raises(InvalidParameterError, match="m must be a positive integer"):
            check_m(m)

    def test_every_module_shares_the_m_check(self):
        calls = [
            lambda: r_vector(B(1), 0),
            lambda: zeta(B(1), 0),
            lambda: m_level_hit_numbers(B(1), 1, 0),
            lambda: falling_factorial(2, 0),
            lambda: minimal_bounding_n(B(1), 0),
        ]
        for call in calls:
            with pytest.raises(InvalidParameterError, match="m must be a positive integer, got 0"):
                call()

    def test_remainder(self):
        assert remainder(17, 3) == 2
        assert remainder(-1, 2) == 1


class TestZones:
    def test_worked_example(self):
        found = zones(B(1, 1, 2, 3, 5, 7), 3)
        assert [(z.start, z.end, z.remainder) for z in found] == [(1, 3, 4), (4, 5, 2), (6, 6, 1)]
        assert [z.floor_value for z in found] == [0, 3, 6]
        assert found[0].partial_remainders == (0, 1, 2, 4)

    def test_all_multiples(self):
        assert [(z.start, z.end, z.remainder) for z in zones(B(3, 6), 3)] == [(1, 1, 0), (2, 2, 0)]

    def test_small_board(self):
        assert [(z.start, z.end, z.remainder) for z in zones(B(1, 3, 3), 2)] == [(1, 1, 1), (2, 3, 2)]

    @given(boards(), levels)
    def test_partition_columns_with_increasing_floors(self, board, m):
        found = zones(board, m)
        assert [j for z in found for j in z.columns] == list(range(1, len(board) + 1))
        assert all(a.floor_value < b.floor_value for a, b in zip(found, found[1:]))
        assert all(z.floor_value % m == 0 for z in found)


class TestFlags:
    def test_singleton(self):
        assert is_singleton(B(1, 2, 2, 3), 2)
        assert not is_singleton(B(1, 1, 1), 2)
        assert all(is_singleton(b, 1) for b in boards_up_to(6))

    @given(boards(), levels)
    def test_singleton_matches_zone_description(self, board, m):
        per_zone = all(sum(1 for j in z.columns if board.height(j) % m) <= 1 for z in zones(board, m))
        assert is_singleton(board, m) == per_zone

    def test_m_increasing(self):
        assert is_m_increasing(B(1, 7), 2)
        assert is_m_increasing(B(), 5)
        assert not is_m_increasing(B(1, 3, 3), 2)
        assert not is_m_increasing(B(0, 4), 2)

    def test_m_restricted(self):
        assert is_m_restricted(B(0, 0, 0, 0, 1, 2, 3), 2)
        assert not is_m_restricted(B(0, 1, 5), 2)
        assert is_m_restricted(B(0, 3, 6, 9), 3)
        # a leading zero is assumed when absent
        assert not is_m_restricted(B(3), 2)


class TestLOperator:
    def test_example(self):
        assert level_counts(B(1, 3, 3), 2) == [5, 2]
        assert l_operator(B(1, 3, 3), 2) == B(2, 5)
        assert l_operator(B(2, 2), 2) == B(4)
        assert l_operator(B(), 3) == B()

    def test_output_is_singleton(self):
        for board in boards_up_to(8):
            for m in (1, 2, 3):
                assert is_singleton(l_operator(board, m), m)

    def test_involution_on_singletons(self):
        for m in (1, 2, 3):
            for board in singleton_boards_up_to(8, m):
                assert l_operator(l_operator(board, m), m) == trim(board)

    def test_exchanges_increasing_and_restricted(self):
        for m in (1, 2, 3):
            for board in boards_up_to(8):
                if is_m_restricted(board, m):
                    assert is_m_increasing(l_operator(board, m), m)
                if is_m_increasing(board, m):
                    assert is_m_restricted(l_operator(board, m), m)

    def test_m1_is_transpose(self):
        assert transpose(B(1, 3, 3)) == B(2, 2, 3)
        assert transpose(B(1, 1, 2)) == B(1, 3)
        for board in boards_up_to(7):
            assert l_operator(board, 1) == transpose(board)
            assert is_m_increasing(board, 1) == is_m_restricted(transpose(board), 1)


class TestTriangles:
    def test_triangular_board(self):
        assert triangular_board(4, 2) == B(0, 2, 4, 6)
        assert triangular_board(1, 5) == B(0)
        assert triangular_board(3, 1) == B(0, 1, 2)

    def test_fits_and_minimal_n(self):
        assert fits_in(B(0, 0, 3, 4), 4, 2)
        assert not fits_in(B(0, 0, 3, 4), 3, 2)
        assert minimal_bounding_n(B(0, 0, 3, 4), 2) == 4
        assert minimal_bounding_n(B(), 1) == 1

    def test_minimal_n_is_tight(self):
        for m in (1, 2, 3):
            for board in boards_up_to(8):
                n = minimal_bounding_n(board, m)
                assert fits_in(board, n, m)
                assert n == 1 or not fits_in(board, n - 1, m)

    def test_pad_and_trim(self):
        assert pad(B(1, 5), 4) == B(0, 0, 1, 5)
        assert trim(B(0, 0, 1, 5)) == B(1, 5)
        assert pad(trim(B(0, 2, 2)), 5) == B(0, 0, 0, 2, 2)
        with pytest.raises(InvalidParameterError):
            pad(B(1, 2, 3), 2)


class TestGenerators:
    def test_partition_counts(self):
        assert [sum(1 for _ in partitions_of(k)) for k in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]

    def test_partitions_are_sorted_boards(self):
        listed = [b.columns for b in partitions_of(5)]
        assert listed == sorted(listed)
        assert all(sum(c) == 5 and list(c) == sorted(c) for c in listed)

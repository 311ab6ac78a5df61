import itertools

import pytest
from hypothesis import given

from rooks.board import FerrersBoard, boards_up_to, is_m_restricted, is_singleton, with_leading_zero
from rooks.equivalence import (
    Relation,
    board_from_omega,
    count_singleton_class,
    count_weight_class,
    enumerate_class,
    equivalent_level,
    equivalent_weight,
    m_increasing_construction,
    m_increasing_representative,
    m_restricted_construction,
    m_restricted_singleton_representative,
    multiplicity_profile,
    omega,
    validate_omega,
    validate_zeta_singleton,
    zeta,
)
from rooks.errors import InvalidInputError, InvalidParameterError
from rooks.placement import f_vector, r_vector
from tests.strategies import boards, levels


def B(*heights):
    return FerrersBoard(heights)


class TestRootVectors:
    def test_singleton_zeta(self):
        assert zeta(B(1, 5), 2, 7).entries == (0, 2, 4, 6, 8, 9, 7)

    def test_zone_zeta_matches_factors(self):
        # x + a_j factors of the level product are x - zeta_j
        assert zeta(B(1, 1, 2, 3, 5, 7), 3).entries == (0, 3, 2, 6, 7, 8)

    def test_omega_adds_leading_zero(self):
        vector = omega(B(1, 3, 3), 2)
        assert vector.entries == (0, 1, 1, 3)
        assert vector.columns == 4

    def test_root_vector_kinds(self):
        assert zeta(B(1, 5), 2).kind is Relation.LEVEL
        assert omega(B(1, 5), 2).kind is Relation.WEIGHT
        assert enumerate_class(B(1, 5), 2, Relation.WEIGHT) == enumerate_class(B(1, 5), 2, "weight")

    def test_too_few_columns(self):
        with pytest.raises(InvalidParameterError):
            zeta(B(1, 2, 3), 1, 2)

    @given(boards(), levels)
    def test_omega_is_valid(self, board, m):
        assert validate_omega(omega(board, m).entries, m)
        assert board_from_omega(omega(board, m).entries, m) == with_leading_zero(board)

    def test_validate_omega_rejects(self):
        assert not validate_omega((1, 2), 2)
        assert not validate_omega((0, 3), 2)
        assert validate_omega((), 2)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_singleton_zeta_is_valid(self, m):
        for board in boards_up_to(6):
            if is_singleton(board, m):
                assert validate_zeta_singleton(zeta(board, m, board.size + 1).entries, m), board

    def test_multiplicity_profile(self):
        assert multiplicity_profile((0, 2, 2, 5)).counts == (1, 0, 2, 0, 0, 1)
        with pytest.raises(InvalidInputError):
            multiplicity_profile((0, -1))


class TestEquivalence:
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_level_relation_matches_rook_vectors(self, m):
        pool = list(boards_up_to(5))
        for first, second in itertools.combinations(pool, 2):
            assert equivalent_level(first, second, m) == (r_vector(first, m) == r_vector(second, m)), (first, second)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_weight_relation_matches_file_vectors(self, m):
        pool = list(boards_up_to(5))
        for first, second in itertools.combinations(pool, 2):
            assert equivalent_weight(first, second, m) == (f_vector(first, m) == f_vector(second, m)), (first, second)

    def test_leading_zeros_do_not_matter(self):
        assert equivalent_level(B(0, 0, 1, 3), B(1, 3), 2)
        assert equivalent_weight(B(0, 2), B(2), 2)


class TestRepresentatives:
    def test_m_increasing(self):
        construction = m_increasing_construction(B(1, 2, 2, 3), 2)
        assert construction.columns == 9
        assert construction.rearranged == (0, 2, 4, 6, 8, 10, 12, 13, 9)
        assert construction.representative == B(1, 7)

    def test_m_increasing_via_l_operator(self):
        # (1,1,1) is not 2-singleton; l sends it to the single column (3)
        construction = m_increasing_construction(B(1, 1, 1), 2)
        assert construction.singleton_board == B(3)
        assert r_vector(construction.representative, 2) == r_vector(B(1, 1, 1), 2)

    def test_m_restricted(self):
        construction = m_restricted_construction(B(1, 5), 2)
        assert construction.root_vector == (0, 2, 4, 6, 8, 9, 7)
        assert construction.rearranged == (0, 2, 4, 6, 7, 8, 9)
        assert construction.representative == B(1, 2, 3)
        assert is_m_restricted(construction.representative, 2)

    def test_m_restricted_singleton(self):
        assert m_restricted_singleton_representative(B(1, 2, 2, 3), 2) == B(1, 2, 2, 3)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_representatives_stay_in_class(self, m):
        for board in boards_up_to(6):
            assert r_vector(m_increasing_representative(board, m), m) == r_vector(board, m), board
            assert f_vector(m_restricted_construction(board, m).representative, m) == f_vector(board, m), board


class TestClassSizes:
    def test_fixtures(self):
        assert count_singleton_class(B(1, 2, 2, 3), 2) == 2
        assert count_weight_class(B(0, 0, 3, 4), 2) == 3

    def test_singleton_members(self):
        members = [b for b in enumerate_class(B(1, 2, 2, 3), 2, "level") if is_singleton(b, 2)]
        assert B(1, 2, 2, 3) in members and B(1, 7) in members
        assert len(members) == 2

    def test_non_singleton_rejected(self):
        with pytest.raises(InvalidInputError):
            count_singleton_class(B(1, 1, 1), 2)

    def test_unknown_relation(self):
        with pytest.raises(ValueError):
            enumerate_class(B(1), 1, "bogus")

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_counts_match_enumeration(self, m):
        for board in boards_up_to(6):
            weight = enumerate_class(board, m, "weight")
            assert count_weight_class(board, m) == len(weight), board
            if is_singleton(board, m):
                level = [b for b in enumerate_class(board, m, "level") if is_singleton(b, m)]
                assert count_singleton_class(board, m) == len(level), board

    @pytest.mark.slow
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_counts_match_enumeration_to_ten_cells(self, m):
        for board in boards_up_to(10):
            assert count_weight_class(board, m) == len(enumerate_class(board, m, "weight")), board
            if is_singleton(board, m):
                level = [b for b in enumerate_class(board, m, "level") if is_singleton(b, m)]
                assert count_singleton_class(board, m) == len(level), board

import pytest

from rooks.board import FerrersBoard, boards_up_to
from rooks.errors import InvalidInputError
from rooks.placement import (
    CellSetBoard,
    Placement,
    PlacementKind,
    PlacementStats,
    coinversions,
    enumerate_placements,
    f_km,
    f_vector,
    file_count,
    inversions,
    m_cohook,
    m_diagram,
    m_weight,
    permutation_to_placement,
    permutations_pq_generating_function,
    placement_stats,
    placements_on,
    pq_rook_poly,
    pq_rook_vector,
    pq_weight,
    r_km,
    r_vector,
)
from rooks.polynomial import PQ, LaurentPoly, pq_factorial

# Figure-style example: 3-level placement on (1,1,2,3,5,7) with rooks in columns 4 and 5
ABC_BOARD = FerrersBoard((1, 1, 2, 3, 5, 7))
ABC_ROOKS = ((4, 2), (5, 4))


class TestPlacements:
    def test_shared_level_is_rejected(self):
        with pytest.raises(InvalidInputError):
            Placement(((1, 1), (2, 2)), PlacementKind.ROOK, 2)
        Placement(((1, 1), (2, 2)), PlacementKind.ROOK, 1)

    def test_file_placements_share_rows(self):
        Placement(((1, 1), (2, 1)), PlacementKind.FILE, 3)
        with pytest.raises(InvalidInputError):
            Placement(((1, 1), (1, 2)), PlacementKind.FILE, 3)

    def test_off_board(self):
        with pytest.raises(InvalidInputError):
            placements_on(FerrersBoard((1, 2)), [(1, 2)])


class TestRookNumbers:
    def test_classical_and_level_vectors(self):
        board = FerrersBoard((1, 3, 3))
        assert r_vector(board, 1) == (1, 7, 10, 2)
        assert r_vector(board, 2) == (1, 7, 6)
        assert r_km(board, 3, 2) == 0

    def test_enumeration_is_exhaustive(self):
        board = FerrersBoard((2, 2))
        listed = list(enumerate_placements(board, 2, PlacementKind.ROOK, 1))
        assert sorted(p.rooks for p in listed) == [((1, 1), (2, 2)), ((1, 2), (2, 1))]
        assert list(enumerate_placements(board, 2, PlacementKind.ROOK, 2)) == []

    def test_cell_set_boards(self):
        square = CellSetBoard.rectangle(3, 3)
        assert r_km(square, 3, 1) == 6
        assert square.size == 9
        assert r_km(CellSetBoard.rectangle(2, 4), 2, 2) == 8


class TestFilePlacements:
    def test_figure_weight(self):
        board = FerrersBoard((2, 2, 3, 3, 3, 3))
        rooks = [(1, 1), (2, 1), (3, 1), (4, 3), (5, 3)]
        placement = placements_on(board, rooks, PlacementKind.FILE, 3)
        assert m_weight(placement, 3) == -20

    def test_rook_placement_weight_is_one(self):
        for placement in enumerate_placements(FerrersBoard((1, 2, 3)), 2, PlacementKind.ROOK, 1):
            assert m_weight(placement, 3) == 1

    def test_unweighted_counts_are_elementary_symmetric(self):
        for board in boards_up_to(6):
            for k in range(len(board) + 1):
                assert sum(1 for _ in enumerate_placements(board, k, PlacementKind.FILE)) == file_count(board, k)

    def test_m1_weights_match_rooks(self):
        # 1 * (1 - 1) = 0 kills every shared row
        for board in boards_up_to(6):
            assert f_vector(board, 1) == r_vector(board, 1)

    def test_f_km_small(self):
        board = FerrersBoard((1, 1))
        assert f_km(board, 2, 2) == -1


class TestStatistics:
    def test_figure_abc(self):
        placement = placements_on(ABC_BOARD, ABC_ROOKS, PlacementKind.ROOK, 3)
        stats = placement_stats(placement, ABC_BOARD, 3)
        assert (stats.alpha, stats.beta, stats.epsilon) == (2, 1, 5)
        assert stats.inv_m == 7
        assert stats.coinv_m == 6
        # beta - (4 + 5) * 3 = -26
        assert pq_weight(placement, ABC_BOARD, 3) == LaurentPoly(PQ, {(-26, 7): 1})

    def test_diagram_and_cohook(self):
        placement = placements_on(ABC_BOARD, ABC_ROOKS, PlacementKind.ROOK, 3)
        diagram = m_diagram(placement, ABC_BOARD, 3)
        assert diagram == {(1, 1), (2, 1), (3, 1), (3, 2), (4, 3), (5, 5), (6, 7)}
        cohook = m_cohook((4, 2), ABC_BOARD, 3)
        assert {(4, 1), (4, 2), (5, 1), (6, 3)} <= cohook
        assert (4, 3) not in cohook

    def test_identities_on_every_placement(self):
        for board in boards_up_to(5):
            for m in (1, 2):
                for k in range(len(board) + 1):
                    for placement in enumerate_placements(board, k, PlacementKind.ROOK, m):
                        stats = placement_stats(placement, board, m)
                        assert stats.inv_decomposes() and stats.coinv_decomposes()
                        assert stats.inv_m == stats.alpha + stats.epsilon
                        assert stats.coinv_m == stats.beta + stats.epsilon

    def test_inconsistent_stats_are_reported_not_raised(self):
        stats = PlacementStats(alpha=1, beta=0, epsilon=0, inv_m=2, coinv_m=0)
        assert not stats.inv_decomposes()
        assert stats.coinv_decomposes()

    def test_pq_rook_numbers_specialize(self):
        for board in boards_up_to(6):
            for m in (1, 2, 3):
                vector = pq_rook_vector(board, m)
                counts = [r.evaluate({"p": 1, "q": 1}) for r in vector]
                assert tuple(counts[: len(r_vector(board, m))]) == r_vector(board, m)
                assert pq_rook_poly(board, 0, m) == LaurentPoly(PQ, {(0, board.size): 1})


class TestPermutations:
    def test_permutation_placement(self):
        placement = permutation_to_placement([4, 1, 3, 2])
        assert set(placement.rooks) == {(1, 1), (2, 4), (3, 2), (4, 3)}
        assert inversions([4, 1, 3, 2]) == 4
        assert coinversions([4, 1, 3, 2]) == 2

    def test_not_a_permutation(self):
        with pytest.raises(InvalidInputError):
            permutation_to_placement([1, 1, 2])

    @pytest.mark.parametrize("n", range(7))
    def test_rodrigues(self, n):
        assert permutations_pq_generating_function(n) == pq_factorial(n)

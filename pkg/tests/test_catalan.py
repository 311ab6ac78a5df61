import pytest

from rooks.board import FerrersBoard, boards_up_to, minimal_bounding_n
from rooks.catalan import (
    BoundedBoard,
    area,
    board_from_path,
    bounce,
    bounce_compositions,
    bounce_path,
    bounce_path_from_composition,
    bounce_rectangles,
    boundary_path,
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
    omega_check,
    omega_hat,
    omega_of,
    phi,
    qt_catalan,
    qt_catalan_bounce,
)
from rooks.errors import BounceError, InvalidInputError, InvalidParameterError
from rooks.polynomial import Q_ONLY, LaurentPoly

SMALL = [(n, m) for m in (1, 2, 3) for n in (1, 2, 3, 4) if not (m == 3 and n == 4)]
LARGE = [pytest.param(n, m, marks=pytest.mark.slow) for n, m in ((4, 3), (5, 1), (5, 2), (5, 3))]


def bb(columns, n, m):
    return BoundedBoard(FerrersBoard(tuple(columns)), n, m)


@pytest.fixture
def example():
    return bb((0, 0, 3, 4), 4, 2)


class TestStatistics:
    def test_example(self, example):
        assert omega_of(example) == (0, 2, 1, 2)
        assert area(example) == 5
        assert dinv_board(example) == 6
        assert bounce(example) == 4
        assert bounce_path(example).h == (2, 0, 2, 0)

    def test_bounds(self):
        with pytest.raises(InvalidInputError):
            bb((0, 3), 2, 2)
        with pytest.raises(InvalidInputError):
            bb((0, 1), 3, 1)
        with pytest.raises(InvalidParameterError):
            bb((), 0, 1)
        assert BoundedBoard.of(FerrersBoard((3, 4)), 4, 2).columns == (0, 0, 3, 4)

    def test_zero_board(self):
        zero = bb((0, 0, 0), 3, 2)
        assert area(zero) == 6
        assert bounce_path(zero).h == (3, 0)
        assert bounce(zero) == 0

    def test_full_triangle(self):
        full = bb((0, 1, 2), 3, 1)
        assert area(full) == 0
        assert dinv_board(full) == 3

    @pytest.mark.parametrize("n,m", SMALL)
    def test_dinv_forms_agree(self, n, m):
        for bounded in bounded_boards(n, m):
            vector = omega_of(bounded)
            assert dinv(vector, m) == dinv_pairwise(vector, m)


class TestPaths:
    def test_boundary_path(self, example):
        word = boundary_path(example)
        assert word == "EENNNENENNNN"
        assert board_from_path(word, 4, 2) == example

    def test_bad_path(self):
        with pytest.raises(InvalidInputError):
            board_from_path("EN", 2, 1)

    def test_rectangles_tile_the_path(self, example):
        path = bounce_path(example)
        rectangles = bounce_rectangles(path)
        assert sum(r.width for r in rectangles) == 4
        assert sum(r.height for r in rectangles) == 8

    def test_composition_round_trip(self, example):
        path = bounce_path(example)
        assert bounce_path_from_composition(path.composition, 4, 2) == path

    def test_broken_runs(self):
        with pytest.raises(BounceError):
            bounce_path_from_composition((1, 0, 0, 1), 2, 2)


class TestPhi:
    def test_example(self, example):
        image = phi(example)
        assert image.columns == (0, 1, 2, 3)
        assert area(image) == 6
        assert bounce(image) == 5
        assert bounce_path(image).h == (1, 1, 2, 0)

    @pytest.mark.parametrize(
        "columns,expected",
        [((0, 1, 2, 4), (0, 1, 3, 3)), ((0, 0, 2, 5), (0, 1, 2, 2))],
    )
    def test_class_members(self, columns, expected):
        assert phi(bb(columns, 4, 2)).columns == expected

    @pytest.mark.parametrize("n,m", SMALL + LARGE)
    def test_exchange_and_bijection(self, n, m):
        boards = list(bounded_boards(n, m))
        images = set()
        for bounded in boards:
            image = phi(bounded)
            assert area(image) == dinv_board(bounded)
            assert bounce(image) == area(bounded)
            images.add(image.columns)
        assert len(images) == len(boards)


class TestCatalanPolynomials:
    @pytest.mark.parametrize("n,m,expected", [(3, 1, 5), (4, 1, 14), (2, 2, 3), (3, 2, 12)])
    def test_counts(self, n, m, expected):
        assert higher_catalan_number(n, m) == expected
        assert lattice_path_count(n, m) == expected
        assert sum(1 for _ in bounded_boards(n, m)) == expected
        assert qt_catalan(n, m).evaluate({"q": 1, "t": 1}) == expected

    @pytest.mark.parametrize("n,m", SMALL + LARGE)
    def test_dinv_and_bounce_forms_agree(self, n, m):
        assert qt_catalan(n, m) == qt_catalan_bounce(n, m)

    def test_three_one(self):
        poly = qt_catalan(3, 1)
        assert poly.coefficient({"q": 0, "t": 3}) == 1
        assert poly.coefficient({"q": 1, "t": 1}) == 1
        assert poly.coefficient({"q": 3, "t": 0}) == 1


class TestWeightClasses:
    def test_class_generating_function(self):
        board = FerrersBoard((0, 0, 3, 4))
        expected = LaurentPoly(Q_ONLY, {(5,): 1, (6,): 1, (7,): 1})
        assert class_dinv_generating_function(board, 4, 2) == expected
        assert class_dinv_bruteforce(board, 4, 2) == expected

    def test_extremal_boards(self):
        low, high = extremal_dinv_boards(FerrersBoard((0, 0, 3, 4)), 2)
        assert low == FerrersBoard((0, 1, 2, 4))
        assert high == FerrersBoard((0, 0, 2, 5))
        assert dinv(omega_hat((0, 2, 1, 2), 2), 2) == 5
        assert dinv(omega_check((0, 2, 1, 2), 2), 2) == 7

    def test_outside_triangle(self):
        with pytest.raises(InvalidInputError):
            class_dinv_generating_function(FerrersBoard((3,)), 1, 2)

    @pytest.mark.parametrize("n,m", SMALL)
    def test_class_counts(self, n, m):
        assert count_weight_classes_bruteforce(n, m) == count_weight_classes_in_triangle(n, m)
        assert len(bounce_compositions(n, m)) == (m + 1) ** (n - 1)

    @pytest.mark.parametrize("n,m", [(3, 1), (3, 2), (4, 2)])
    def test_generating_function_matches_enumeration(self, n, m):
        for bounded in bounded_boards(n, m):
            board = bounded.board
            assert class_dinv_generating_function(board, n, m) == class_dinv_bruteforce(board, n, m), board

    @pytest.mark.slow
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_generating_function_at_bounding_n(self, m):
        for board in boards_up_to(7):
            n = minimal_bounding_n(board, m)
            assert class_dinv_generating_function(board, n, m) == class_dinv_bruteforce(board, n, m), board

from hypothesis import strategies as st

from rooks.board import FerrersBoard


def boards(max_columns: int = 5, max_height: int = 7):
    return st.lists(st.integers(min_value=0, max_value=max_height), max_size=max_columns).map(lambda hs: FerrersBoard(tuple(sorted(hs))))


levels = st.integers(min_value=1, max_value=4)

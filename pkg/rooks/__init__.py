"""Exact arithmetic for m-level rook placements on Ferrers boards."""

from rooks.board import FerrersBoard, format_board, parse_board
from rooks.errors import (
    BasisTooShallowError,
    BounceError,
    InvalidInputError,
    InvalidParameterError,
    VariableMismatchError,
)
from rooks.polynomial import IntPolynomial, LaurentPoly

__all__ = [
    "BasisTooShallowError",
    "BounceError",
    "FerrersBoard",
    "IntPolynomial",
    "InvalidInputError",
    "InvalidParameterError",
    "LaurentPoly",
    "VariableMismatchError",
    "format_board",
    "parse_board",
]

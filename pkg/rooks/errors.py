# rooks/errors.py


class InvalidParameterError(ValueError):
    """A numeric parameter (m, n, k, x, ...) is outside its contract."""


class InvalidInputError(ValueError):
    """A board, placement or vector does not satisfy the operation's precondition."""


class BasisTooShallowError(ValueError):
    """Falling factorial expansion requested with a depth below the polynomial degree."""


class VariableMismatchError(ValueError):
    """Laurent polynomials over different variable sets were combined."""


class BounceError(RuntimeError):
    """A bounce path did not terminate at (n, nm) within its step bound."""


def check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise InvalidParameterError(f"m must be a positive integer, got {m!r}")

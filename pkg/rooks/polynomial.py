# rooks/polynomial.py
"""
Exact polynomial arithmetic.

IntPolynomial   univariate, integer coefficients, used for the factorization products.
LaurentPoly     multivariate over a declared ordered variable set, negative exponents allowed.

Everything here is immutable; operations return new values.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence, Union

from rooks.errors import BasisTooShallowError, InvalidParameterError, VariableMismatchError, check_m

logger = logging.getLogger("rooks.polynomial")

# degree reported by the zero polynomial
ZERO_DEGREE = -1

PQ = ("p", "q")
Q_ONLY = ("q",)
QT = ("q", "t")
PQ_FORMAL = ("p", "q", "P", "Q")
XPQ = ("x", "p", "q")


class IntPolynomial:
    """Sparse univariate polynomial in x with integer coefficients."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Mapping[int, int] | Sequence[int] | None = None):
        if coefficients is None:
            items: Iterable[tuple[int, int]] = ()
        elif isinstance(coefficients, Mapping):
            items = coefficients.items()
        else:
            items = enumerate(coefficients)
        stored: dict[int, int] = {}
        for degree, value in items:
            if degree < 0:
                raise InvalidParameterError(f"negative degree {degree} in IntPolynomial")
            if value:
                stored[int(degree)] = stored.get(int(degree), 0) + int(value)
                if stored[int(degree)] == 0:
                    del stored[int(degree)]
        self._coefficients = stored

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls({0: value})

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls({1: 1})

    @classmethod
    def linear(cls, offset: int) -> "IntPolynomial":
        """x + offset"""
        return cls({1: 1, 0: offset})

    @classmethod
    def product(cls, factors: Iterable["IntPolynomial"]) -> "IntPolynomial":
        result = cls.constant(1)
        for factor in factors:
            result = result * factor
        return result

    @property
    def degree(self) -> int:
        return max(self._coefficients) if self._coefficients else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self._coefficients

    def coefficient(self, degree: int) -> int:
        return self._coefficients.get(degree, 0)

    def coefficients(self) -> list[int]:
        """Dense coefficient list, constant term first."""
        return [self.coefficient(d) for d in range(self.degree + 1)]

    def __call__(self, value: int) -> int:
        result = 0
        for degree in range(self.degree, -1, -1):
            result = result * value + self.coefficient(degree)
        return result

    def __add__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        other = _as_int_polynomial(other)
        merged = dict(self._coefficients)
        for degree, value in other._coefficients.items():
            merged[degree] = merged.get(degree, 0) + value
        return IntPolynomial(merged)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({d: -c for d, c in self._coefficients.items()})

    def __sub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return self + (-_as_int_polynomial(other))

    def __rsub__(self, other: int) -> "IntPolynomial":
        return _as_int_polynomial(other) - self

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        other = _as_int_polynomial(other)
        result: dict[int, int] = {}
        for d1, c1 in self._coefficients.items():
            for d2, c2 in other._coefficients.items():
                result[d1 + d2] = result.get(d1 + d2, 0) + c1 * c2
        return IntPolynomial(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise InvalidParameterError("IntPolynomial supports only nonnegative powers")
        result = IntPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coefficients.items())))

    def render(self) -> str:
        terms = [(c, _x_power(d)) for d, c in sorted(self._coefficients.items(), reverse=True)]
        return _join_terms(terms)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.render()})"


def _as_int_polynomial(value: Union[IntPolynomial, int]) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial.constant(value)
    raise TypeError(f"cannot combine IntPolynomial with {type(value).__name__}")


def _x_power(degree: int) -> str:
    if degree == 0:
        return ""
    return "x" if degree == 1 else f"x^{degree}"


def _join_terms(terms: Sequence[tuple[int, str]]) -> str:
    """Render (coefficient, monomial) pairs with explicit signs; "" monomial is the constant."""
    if not terms:
        return "0"
    parts: list[str] = []
    for index, (coefficient, monomial) in enumerate(terms):
        magnitude = abs(coefficient)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if index == 0:
            parts.append(f"-{body}" if coefficient < 0 else body)
        else:
            parts.append(f"{'-' if coefficient < 0 else '+'} {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# m-falling factorials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FallingFactorialExpansion:
    """Coefficients c_0..c_n with P = sum c_k * x_(n-k, m)."""

    m: int
    coefficients: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.coefficients) - 1

    def to_polynomial(self) -> IntPolynomial:
        n = self.depth
        result = IntPolynomial()
        for k, c in enumerate(self.coefficients):
            if c:
                result = result + falling_factorial(n - k, self.m) * c
        return result


@lru_cache(maxsize=None)
def falling_factorial(n: int, m: int) -> IntPolynomial:
    """x(x - m)(x - 2m)...(x - (n-1)m)."""
    check_m(m)
    if n < 0:
        raise InvalidParameterError(f"falling factorial length must be nonnegative, got {n}")
    return IntPolynomial.product(IntPolynomial.linear(-i * m) for i in range(n))


def falling_factorial_value(x: int, n: int, m: int) -> int:
    result = 1
    for i in range(n):
        result *= x - i * m
    return result


def to_falling_basis(polynomial: IntPolynomial, m: int, n: int) -> FallingFactorialExpansion:
    """Expand in the basis x_(n,m), x_(n-1,m), ..., 1 by peeling the top degree."""
    check_m(m)
    if polynomial.degree > n:
        raise BasisTooShallowError(f"degree {polynomial.degree} exceeds basis depth {n}")
    remainder = polynomial
    coefficients = [0] * (n + 1)
    for degree in range(n, -1, -1):
        leading = remainder.coefficient(degree)
        if leading:
            coefficients[n - degree] = leading
            remainder = remainder - falling_factorial(degree, m) * leading
    if not remainder.is_zero():
        raise ArithmeticError(f"falling basis peel left remainder {remainder.render()}")
    return FallingFactorialExpansion(m=m, coefficients=tuple(coefficients))


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

Exponents = tuple[int, ...]


def _int_power(value: int, exponent: int) -> int:
    if exponent >= 0:
        return value**exponent
    if value == 1:
        return 1
    if value == -1:
        return -1 if exponent % 2 else 1
    raise InvalidParameterError(f"cannot raise integer {value} to negative power {exponent}")


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients over an ordered variable set."""

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponents, int] | None = None):
        self.variables: tuple[str, ...] = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise VariableMismatchError(f"repeated variable in {self.variables}")
        stored: dict[Exponents, int] = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != len(self.variables):
                raise VariableMismatchError(f"exponent vector {exponents} does not match variables {self.variables}")
            if coefficient:
                total = stored.get(exponents, 0) + int(coefficient)
                if total:
                    stored[exponents] = total
                else:
                    stored.pop(exponents, None)
        self._terms = stored

    # constructors

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], value: int) -> "LaurentPoly":
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls.constant(variables, 1)

    @classmethod
    def monomial(cls, variables: Sequence[str], powers: Mapping[str, int], coefficient: int = 1) -> "LaurentPoly":
        variables = tuple(variables)
        unknown = set(powers) - set(variables)
        if unknown:
            raise VariableMismatchError(f"variables {sorted(unknown)} not in {variables}")
        return cls(variables, {tuple(powers.get(v, 0) for v in variables): coefficient})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "LaurentPoly":
        return cls.monomial(variables, {name: 1})

    # inspection

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponents, int]]:
        return iter(sorted(self._terms.items(), key=_term_order))

    def coefficient(self, powers: Mapping[str, int] | Exponents) -> int:
        if isinstance(powers, Mapping):
            powers = tuple(powers.get(v, 0) for v in self.variables)
        return self._terms.get(tuple(powers), 0)

    def constant_value(self) -> int:
        """The value of a polynomial with no variables, or of a constant."""
        if any(any(e) for e in self._terms):
            raise InvalidParameterError(f"{self.render()} is not a constant")
        return self._terms.get((0,) * len(self.variables), 0)

    # arithmetic

    def _coerce(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise VariableMismatchError(f"cannot combine {self.variables} with {other.variables}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.variables, other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        other = self._coerce(other)
        merged = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            merged[exponents] = merged.get(exponents, 0) + coefficient
        return LaurentPoly(self.variables, merged)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        other = self._coerce(other)
        result: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                result[key] = result.get(key, 0) + c1 * c2
        return LaurentPoly(self.variables, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if not self.is_monomial():
                raise InvalidParameterError("negative powers are defined for monomials only")
            ((exponents, coefficient),) = self._terms.items()
            if coefficient not in (1, -1):
                raise InvalidParameterError(f"monomial coefficient {coefficient} is not invertible")
            return LaurentPoly(
                self.variables,
                {tuple(e * exponent for e in exponents): _int_power(coefficient, exponent)},
            )
        result = LaurentPoly.one(self.variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == LaurentPoly.constant(self.variables, other)._terms
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.variables, tuple(sorted(self._terms.items()))))

    # variable handling

    def extend(self, variables: Sequence[str]) -> "LaurentPoly":
        """Re-embed into a superset variable order."""
        variables = tuple(variables)
        missing = set(self.variables) - set(variables)
        if missing:
            raise VariableMismatchError(f"cannot drop variables {sorted(missing)} by extending")
        positions = [self.variables.index(v) if v in self.variables else None for v in variables]
        return LaurentPoly(
            variables,
            {tuple(0 if p is None else e[p] for p in positions): c for e, c in self._terms.items()},
        )

    def substitute(
        self,
        mapping: Mapping[str, Union["LaurentPoly", int]],
        variables: Sequence[str] | None = None,
    ) -> "LaurentPoly":
        """
        Replace variables by integers or by Laurent polynomials over `variables`.

        Variables not in the mapping must be present in the target set. Negative
        exponents are only allowed when the substitute is a monomial (or +-1).
        """
        if variables is None:
            variables = tuple(v for v in self.variables if v not in mapping)
        variables = tuple(variables)
        unknown = set(mapping) - set(self.variables)
        if unknown:
            raise VariableMismatchError(f"substituting unknown variables {sorted(unknown)}")
        for name in self.variables:
            if name not in mapping and name not in variables:
                raise VariableMismatchError(f"variable {name} neither substituted nor kept in {variables}")
        values: dict[str, Union[LaurentPoly, int]] = {}
        for name, value in mapping.items():
            if isinstance(value, LaurentPoly) and value.variables != variables:
                value = value.extend(variables)
            values[name] = value

        power_cache: dict[tuple[str, int], Union[LaurentPoly, int]] = {}

        def power(name: str, exponent: int) -> Union[LaurentPoly, int]:
            key = (name, exponent)
            if key not in power_cache:
                value = values[name]
                power_cache[key] = _int_power(value, exponent) if isinstance(value, int) else value**exponent
            return power_cache[key]

        result = LaurentPoly.zero(variables)
        for exponents, coefficient in self._terms.items():
            kept: dict[str, int] = {}
            scalar = coefficient
            factors: list[LaurentPoly] = []
            for name, exponent in zip(self.variables, exponents):
                if name in values:
                    if exponent == 0:
                        continue
                    value = power(name, exponent)
                    if isinstance(value, int):
                        scalar *= value
                    else:
                        factors.append(value)
                elif exponent:
                    kept[name] = exponent
            term = LaurentPoly.monomial(variables, kept, scalar)
            for factor in factors:
                term = term * factor
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, int]) -> int:
        return self.substitute(values, ()).constant_value()

    def coefficients_in(self, name: str) -> dict[int, "LaurentPoly"]:
        """Group terms by the exponent of `name`; values live over the remaining variables."""
        if name not in self.variables:
            raise VariableMismatchError(f"{name} is not a variable of {self.variables}")
        index = self.variables.index(name)
        rest = self.variables[:index] + self.variables[index + 1 :]
        grouped: dict[int, dict[Exponents, int]] = {}
        for exponents, coefficient in self._terms.items():
            grouped.setdefault(exponents[index], {})[exponents[:index] + exponents[index + 1 :]] = coefficient
        return {e: LaurentPoly(rest, terms) for e, terms in sorted(grouped.items())}

    # output

    def negative_terms(self) -> list[tuple[Exponents, int]]:
        return [(e, c) for e, c in self if c < 0]

    def terms_table(self) -> list[dict[str, int]]:
        rows = []
        for exponents, coefficient in self:
            row = dict(zip(self.variables, exponents))
            row["coefficient"] = coefficient
            rows.append(row)
        return rows

    def monomial_text(self, exponents: Exponents) -> str:
        parts = []
        for name, e in zip(self.variables, exponents):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def render(self) -> str:
        return _join_terms([(c, self.monomial_text(e)) for e, c in self])

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.variables}, {self.render()})"


def _term_order(item: tuple[Exponents, int]) -> tuple[int, Exponents]:
    exponents, _ = item
    return (sum(exponents), exponents)


# ---------------------------------------------------------------------------
# p,q-integers and friends
# ---------------------------------------------------------------------------


def _pq_monomial(p_power: int, q_power: int, coefficient: int = 1) -> LaurentPoly:
    return LaurentPoly(PQ, {(p_power, q_power): coefficient})


@lru_cache(maxsize=None)
def pq_integer(n: int) -> LaurentPoly:
    """[n] = p^(n-1) + p^(n-2) q + ... + q^(n-1)."""
    if n < 0:
        raise InvalidParameterError(f"pq_integer expects n >= 0, got {n}; use pq_bracket")
    return LaurentPoly(PQ, {(n - 1 - i, i): 1 for i in range(n)})


def pq_bracket(a: int) -> LaurentPoly:
    """(p^a - q^a)/(p - q) for any integer a."""
    if a >= 0:
        return pq_integer(a)
    return -(_pq_monomial(a, a) * pq_integer(-a))


@lru_cache(maxsize=None)
def pq_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise InvalidParameterError(f"pq_factorial expects n >= 0, got {n}")
    result = LaurentPoly.one(PQ)
    for i in range(1, n + 1):
        result = result * pq_integer(i)
    return result


def pq_falling_factorial(a: int, n: int, m: int) -> LaurentPoly:
    """[a][a - m]...[a - (n-1)m]."""
    check_m(m)
    result = LaurentPoly.one(PQ)
    for i in range(n):
        result = result * pq_bracket(a - i * m)
    return result


@lru_cache(maxsize=None)
def q_integer(n: int) -> LaurentPoly:
    if n < 0:
        raise InvalidParameterError(f"q_integer expects n >= 0, got {n}")
    return LaurentPoly(Q_ONLY, {(i,): 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise InvalidParameterError(f"q_factorial expects n >= 0, got {n}")
    result = LaurentPoly.one(Q_ONLY)
    for i in range(1, n + 1):
        result = result * q_integer(i)
    return result


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial via [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if n < 0:
        raise InvalidParameterError(f"q_binomial expects n >= 0, got {n}")
    if k < 0 or k > n:
        return LaurentPoly.zero(Q_ONLY)
    if k == 0 or k == n:
        return LaurentPoly.one(Q_ONLY)
    shift = LaurentPoly(Q_ONLY, {(k,): 1})
    return q_binomial(n - 1, k - 1) + shift * q_binomial(n - 1, k)


def multinomial(top: int, parts: Sequence[int]) -> int:
    """top! / (parts[0]! parts[1]! ...), with sum(parts) == top."""
    if any(p < 0 for p in parts) or sum(parts) != top:
        raise InvalidParameterError(f"multinomial parts {tuple(parts)} do not sum to {top}")
    result = factorial(top)
    for part in parts:
        result //= factorial(part)
    return result


def elementary_symmetric(values: Sequence[int], k: int) -> int:
    if k < 0:
        return 0
    # e_0..e_k built column by column
    e = [1] + [0] * k
    for value in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * value
    return e[k]

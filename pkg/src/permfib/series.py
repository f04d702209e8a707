"""Exact truncated power series and the generating-function identity checks.

Coefficients are rationals (stdlib :class:`~fractions.Fraction`), or nested
series so that a bivariate object can be held as a series in x whose
coefficients are series in t.  All arithmetic is exact; floating point is
deliberately absent from this module.  Operations on series of different
orders truncate to the smaller order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import InvalidInputError, ResourceLimitError, SingularSeriesError
from .permutations import (
    contains_ascending_run,
    contains_descending_run,
    inverse_letters,
    left_peak_count,
    letter_tuples,
    peak_count,
)

Coefficient = Union[Fraction, "TruncatedSeries"]

_ENUMERATION_ORDER_LIMIT = 9


def _coeff_zero(like: Coefficient) -> Coefficient:
    if isinstance(like, TruncatedSeries):
        return like.zero_like()
    return Fraction(0)


def _coeff_one(like: Coefficient) -> Coefficient:
    if isinstance(like, TruncatedSeries):
        return like.one_like()
    return Fraction(1)


def _coeff_invert(value: Coefficient) -> Coefficient:
    if isinstance(value, TruncatedSeries):
        return value.invert()
    if value == 0:
        raise SingularSeriesError("cannot invert a series with zero constant term")
    return Fraction(1) / value


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series kept exactly up to a fixed order.

    Binary operations between two series treat both operands as series in
    the same variable; plain ints and Fractions act as constants.
    """

    coeffs: tuple[Coefficient, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidInputError("a series needs at least the constant coefficient")
        coeffs = tuple(
            Fraction(c) if isinstance(c, int) else c for c in self.coeffs
        )
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, index: int) -> Coefficient:
        """The coefficient of the index-th power; errors beyond the order."""
        if not 0 <= index <= self.order:
            raise InvalidInputError(f"coefficient {index} beyond order {self.order}")
        return self.coeffs[index]

    def zero_like(self) -> "TruncatedSeries":
        zero = _coeff_zero(self.coeffs[0])
        return TruncatedSeries((zero,) * (self.order + 1))

    def one_like(self) -> "TruncatedSeries":
        zero = _coeff_zero(self.coeffs[0])
        return TruncatedSeries((_coeff_one(self.coeffs[0]),) + (zero,) * self.order)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise InvalidInputError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    # -- ring operations ----------------------------------------------------

    def _paired(self, other: "TruncatedSeries") -> tuple[tuple, tuple]:
        order = min(self.order, other.order)
        return self.coeffs[: order + 1], other.coeffs[: order + 1]

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            a, b = self._paired(other)
            return TruncatedSeries(tuple(x + y for x, y in zip(a, b)))
        if isinstance(other, (int, Fraction)):
            return self.add_constant(Fraction(other))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            a, b = self._paired(other)
            return TruncatedSeries(tuple(x - y for x, y in zip(a, b)))
        if isinstance(other, (int, Fraction)):
            return self.add_constant(Fraction(-other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            a, b = self._paired(other)
            zero = _coeff_zero(a[0])
            out = []
            for n in range(len(a)):
                acc = zero
                for i in range(n + 1):
                    acc = acc + a[i] * b[n - i]
                out.append(acc)
            return TruncatedSeries(tuple(out))
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.invert()
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise InvalidInputError("negative powers go through invert()")
        result = self.one_like()
        for _ in range(exponent):
            result = result * self
        return result

    def add_constant(self, value: Coefficient) -> "TruncatedSeries":
        """Add a coefficient-ring constant onto the constant term."""
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + value
        return TruncatedSeries(tuple(coeffs))

    # -- the interesting operations ------------------------------------------

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be invertible.

        >>> geometric = from_coeffs([1, -1], order=4).invert()
        >>> geometric == from_coeffs([1, 1, 1, 1, 1])
        True
        """
        a = self.coeffs
        b0 = _coeff_invert(a[0])
        out = [b0]
        zero = _coeff_zero(b0)
        for n in range(1, len(a)):
            acc = zero
            for i in range(1, n + 1):
                acc = acc + a[i] * out[n - i]
            out.append(-(b0 * acc))
        return TruncatedSeries(tuple(out))

    def sqrt(self) -> "TruncatedSeries":
        """Square root of a series with constant term 1."""
        a = self.coeffs
        if a[0] != _coeff_one(a[0]):
            raise SingularSeriesError("sqrt requires constant term 1")
        out: list[Coefficient] = [_coeff_one(a[0])]
        half = Fraction(1, 2)
        for n in range(1, len(a)):
            acc = a[n]
            for i in range(1, n):
                acc = acc - out[i] * out[n - i]
            out.append(acc * half)
        return TruncatedSeries(tuple(out))

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``inner`` (zero constant term) into this series."""
        if inner.coeffs[0] != _coeff_zero(inner.coeffs[0]):
            raise SingularSeriesError("composition requires inner constant term 0")
        order = min(self.order, inner.order)
        inner_t = inner.truncate(order)
        result = inner_t.zero_like().add_constant(self.coeffs[order])
        for k in range(order - 1, -1, -1):
            result = (result * inner_t).add_constant(self.coeffs[k])
        return result


def from_coeffs(values: Sequence, order: int | None = None) -> TruncatedSeries:
    """Univariate rational series from leading coefficients, zero padded.

    >>> from_coeffs([1, 2]).coeffs
    (Fraction(1, 1), Fraction(2, 1))
    """
    coeffs = [Fraction(v) for v in values]
    if order is None:
        order = max(len(coeffs) - 1, 0)
    if len(coeffs) < order + 1:
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
    return TruncatedSeries(tuple(coeffs[: order + 1]))


def variable(order: int) -> TruncatedSeries:
    """The series t, truncated at the given order >= 1."""
    if order < 1:
        raise InvalidInputError("the variable needs order >= 1")
    return from_coeffs([0, 1], order)


def one_series(order: int) -> TruncatedSeries:
    return from_coeffs([1], order)


def zero_series(order: int) -> TruncatedSeries:
    return from_coeffs([], order)


def evaluate_polynomial(coefficients: Sequence, point: TruncatedSeries) -> TruncatedSeries:
    """Horner evaluation of an exact polynomial at a series."""
    result = point.zero_like()
    for c in reversed(tuple(coefficients)):
        result = result * point + Fraction(c)
    return result


def format_series(s: TruncatedSeries, var: str = "t") -> str:
    """Render as "c0 + c1*t + c2*t^2 + ..." with rationals as p/q.

    >>> format_series(from_coeffs([0, Fraction(1, 4), Fraction(1, 8)]))
    '0 + 1/4*t + 1/8*t^2'
    """
    parts = []
    for i, c in enumerate(s.coeffs):
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*{var}")
        else:
            parts.append(f"{c}*{var}^{i}")
    return " + ".join(parts)


def rational_series(numerator: Sequence, denominator: Sequence, order: int) -> TruncatedSeries:
    """Expand numerator/denominator; the denominator constant must be nonzero."""
    return from_coeffs(numerator, order) * from_coeffs(denominator, order).invert()


# ---------------------------------------------------------------------------
# The substitution t <-> 4t/(1+t)^2 and the closed-form generating functions


def t_substitution(order: int) -> TruncatedSeries:
    """The series 4t/(1+t)^2."""
    t = variable(order)
    return (t * 4) * ((t + 1) ** 2).invert()


def t_substitution_inverse(order: int) -> TruncatedSeries:
    """The series v with 4v/(1+v)^2 = t, i.e. 2(1 - sqrt(1-t))/t - 1.

    The division by t is a coefficient shift: 1 - sqrt(1-t) has no constant
    term, so no Laurent machinery is needed.

    >>> t_substitution_inverse(3).coeffs
    (Fraction(0, 1), Fraction(1, 4), Fraction(1, 8), Fraction(5, 64))
    """
    if order < 1:
        raise InvalidInputError("order must be >= 1")
    root = (one_series(order + 1) - variable(order + 1)).sqrt()
    numerator = one_series(order + 1) - root
    assert numerator.coeffs[0] == 0
    shifted = [2 * numerator.coeffs[i + 1] for i in range(order + 1)]
    shifted[0] -= 1
    return TruncatedSeries(tuple(shifted))


def fibonacci_ogf(m: int, order: int) -> TruncatedSeries:
    """Expansion of (1-x)/(1-2x+x^m): counts order-(m-1) Fibonacci numbers."""
    if m < 2:
        raise InvalidInputError(f"m must be >= 2, got {m}")
    denominator = [0] * (m + 1)
    denominator[0] = 1
    denominator[1] = -2
    denominator[m] += 1
    return rational_series([1, -1], denominator, order)


def ilpk_one_ogf(m: int, order: int) -> TruncatedSeries:
    """Expansion of x^2 (x^(m-2) - 1) / ((1-x)^2 (x^(m+1) - 3x^m + 3x - 1)).

    The coefficient of x^n counts the descending-m-run avoiders whose inverse
    has exactly one left peak, and equally the avoiding block words of
    length n.
    """
    if m < 3:
        raise InvalidInputError(f"m must be >= 3, got {m}")
    numerator = [0] * (m + 1)
    numerator[2] -= 1
    numerator[m] += 1
    factor = [0] * (m + 2)
    factor[0] = -1
    factor[1] = 3
    factor[m] -= 3
    factor[m + 1] += 1
    denominator = _poly_mul([1, -2, 1], factor)
    return rational_series(numerator, denominator, order)


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# ---------------------------------------------------------------------------
# Bracket coefficients for the two master identities


def _validate_mjk(m: int, j: int, k: int) -> None:
    if m < 2 or j < 1 or k < 1:
        raise InvalidInputError(f"need m >= 2, j >= 1, k >= 1, got ({m}, {j}, {k})")


def ipk_gf_coeff(m: int, j: int, k: int) -> int:
    """2 * sum_l C(l+jm-1, l-1) C(jm-1, k-l)."""
    _validate_mjk(m, j, k)
    jm = j * m
    return 2 * sum(
        math.comb(l + jm - 1, l - 1) * math.comb(jm - 1, k - l) for l in range(1, k + 1)
    )


def ipk_gf_coeff_prime(m: int, j: int, k: int) -> int:
    """2 * sum_l C(l+jm, l-1) C(jm, k-l)."""
    _validate_mjk(m, j, k)
    jm = j * m
    return 2 * sum(
        math.comb(l + jm, l - 1) * math.comb(jm, k - l) for l in range(1, k + 1)
    )


def ilpk_gf_coeff(m: int, j: int, k: int) -> int:
    """4 * sum_l C(l+jm-1, l-1) C(jm-2, k-l)."""
    _validate_mjk(m, j, k)
    jm = j * m
    return 4 * sum(
        math.comb(l + jm - 1, l - 1) * math.comb(jm - 2, k - l) for l in range(1, k + 1)
    )


def ilpk_gf_coeff_prime(m: int, j: int, k: int) -> int:
    """4 * sum_l C(l+jm, l-1) C(jm-1, k-l)."""
    _validate_mjk(m, j, k)
    jm = j * m
    return 4 * sum(
        math.comb(l + jm, l - 1) * math.comb(jm - 1, k - l) for l in range(1, k + 1)
    )


# ---------------------------------------------------------------------------
# Enumeration-backed statistic polynomials


@lru_cache(maxsize=None)
def ipk_polynomial(m: int, n: int) -> tuple[int, ...]:
    """Coefficients of sum over ascending-m-run avoiders of t^(ipk+1); 1 at n=0."""
    if m < 2:
        raise InvalidInputError(f"m must be >= 2, got {m}")
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    if n > _ENUMERATION_ORDER_LIMIT:
        raise ResourceLimitError(f"polynomials are enumeration backed; n <= {_ENUMERATION_ORDER_LIMIT}")
    if n == 0:
        return (1,)
    counts = [0] * (n + 2)
    for letters in letter_tuples(n):
        if contains_ascending_run(letters, m):
            continue
        counts[peak_count(inverse_letters(letters)) + 1] += 1
    return _trim(counts)


@lru_cache(maxsize=None)
def ilpk_polynomial(m: int, n: int) -> tuple[int, ...]:
    """Coefficients of sum over descending-m-run avoiders of t^(ilpk); 1 at n=0."""
    if m < 2:
        raise InvalidInputError(f"m must be >= 2, got {m}")
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    if n > _ENUMERATION_ORDER_LIMIT:
        raise ResourceLimitError(f"polynomials are enumeration backed; n <= {_ENUMERATION_ORDER_LIMIT}")
    if n == 0:
        return (1,)
    counts = [0] * (n + 2)
    for letters in letter_tuples(n):
        if contains_descending_run(letters, m):
            continue
        counts[left_peak_count(inverse_letters(letters))] += 1
    return _trim(counts)


def _trim(counts: list[int]) -> tuple[int, ...]:
    last = max((i for i, c in enumerate(counts) if c), default=0)
    return tuple(counts[: last + 1])


# ---------------------------------------------------------------------------
# The two identity checks


def _check_orders(m: int, x_order: int, t_order: int) -> None:
    if m < 2:
        raise InvalidInputError(f"m must be >= 2, got {m}")
    if not 1 <= t_order <= x_order:
        raise InvalidInputError("need 1 <= t_order <= x_order")
    if x_order > 8:
        raise InvalidInputError("x_order is enumeration backed and capped at 8")


def ipk_gf_sides(m: int, x_order: int, t_order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the ipk master identity as series in x over series in t.

    Left side: 1/(1-t) at x^0 plus, for n >= 1, half of
    ((1+t)/(1-t))^(n+1) times the ipk polynomial evaluated at 4t/(1+t)^2.
    Right side: 1 plus, for each k >= 1, t^k times the inverse of
    1 - 2kx + sum_j (c_(m,j,k) x^(jm) - c'_(m,j,k) x^(jm+1)).
    """
    _check_orders(m, x_order, t_order)
    t = variable(t_order)
    inv_one_minus_t = (one_series(t_order) - t).invert()
    ratio = (one_series(t_order) + t) * inv_one_minus_t
    u = t_substitution(t_order)
    half = Fraction(1, 2)

    lhs_rows: list[TruncatedSeries] = [inv_one_minus_t]
    ratio_power = ratio * ratio
    for n in range(1, x_order + 1):
        value = evaluate_polynomial(ipk_polynomial(m, n), u) * ratio_power * half
        lhs_rows.append(value)
        ratio_power = ratio_power * ratio

    rhs_matrix = [[Fraction(0)] * (t_order + 1) for _ in range(x_order + 1)]
    rhs_matrix[0][0] = Fraction(1)
    for k in range(1, t_order + 1):
        bracket = [Fraction(0)] * (x_order + 1)
        bracket[0] = Fraction(1)
        if x_order >= 1:
            bracket[1] -= 2 * k
        j = 1
        while j * m <= x_order:
            bracket[j * m] += ipk_gf_coeff(m, j, k)
            if j * m + 1 <= x_order:
                bracket[j * m + 1] -= ipk_gf_coeff_prime(m, j, k)
            j += 1
        inverted = TruncatedSeries(tuple(bracket)).invert()
        for n in range(x_order + 1):
            rhs_matrix[n][k] += inverted.coeffs[n]

    lhs = TruncatedSeries(tuple(lhs_rows))
    rhs = TruncatedSeries(tuple(TruncatedSeries(tuple(row)) for row in rhs_matrix))
    return lhs, rhs


def ilpk_gf_sides(m: int, x_order: int, t_order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the ilpk master identity, same layout as ipk_gf_sides.

    Left side, for n >= 0: (1+t)^n / (1-t)^(n+1) times the ilpk polynomial
    at 4t/(1+t)^2.  Right side: 1/(1-x) plus, for each k >= 1, t^k times the
    inverse of 1 - (2k+1)x + sum_j (e_(m,j,k) x^(jm) - e'_(m,j,k) x^(jm+1)).
    """
    _check_orders(m, x_order, t_order)
    t = variable(t_order)
    inv_one_minus_t = (one_series(t_order) - t).invert()
    one_plus_t = one_series(t_order) + t
    u = t_substitution(t_order)

    lhs_rows = []
    numerator_power = one_series(t_order)
    denominator_power = inv_one_minus_t
    for n in range(x_order + 1):
        value = evaluate_polynomial(ilpk_polynomial(m, n), u) * numerator_power * denominator_power
        lhs_rows.append(value)
        numerator_power = numerator_power * one_plus_t
        denominator_power = denominator_power * inv_one_minus_t

    rhs_matrix = [[Fraction(0)] * (t_order + 1) for _ in range(x_order + 1)]
    for n in range(x_order + 1):
        rhs_matrix[n][0] += 1
    for k in range(1, t_order + 1):
        bracket = [Fraction(0)] * (x_order + 1)
        bracket[0] = Fraction(1)
        if x_order >= 1:
            bracket[1] -= 2 * k + 1
        j = 1
        while j * m <= x_order:
            bracket[j * m] += ilpk_gf_coeff(m, j, k)
            if j * m + 1 <= x_order:
                bracket[j * m + 1] -= ilpk_gf_coeff_prime(m, j, k)
            j += 1
        inverted = TruncatedSeries(tuple(bracket)).invert()
        for n in range(x_order + 1):
            rhs_matrix[n][k] += inverted.coeffs[n]

    lhs = TruncatedSeries(tuple(lhs_rows))
    rhs = TruncatedSeries(tuple(TruncatedSeries(tuple(row)) for row in rhs_matrix))
    return lhs, rhs


def first_mismatch(
    lhs: TruncatedSeries, rhs: TruncatedSeries
) -> tuple[int, int, Fraction, Fraction] | None:
    """Lowest (x power, t power) where two bivariate series differ."""
    for n in range(min(lhs.order, rhs.order) + 1):
        left_row, right_row = lhs.coeffs[n], rhs.coeffs[n]
        for i in range(min(left_row.order, right_row.order) + 1):
            if left_row.coeffs[i] != right_row.coeffs[i]:
                return n, i, left_row.coeffs[i], right_row.coeffs[i]
    return None


def verify_ipk_gf(m: int, x_order: int, t_order: int) -> bool:
    """True when both sides of the ipk identity agree to the given orders."""
    lhs, rhs = ipk_gf_sides(m, x_order, t_order)
    return lhs == rhs


def verify_ilpk_gf(m: int, x_order: int, t_order: int) -> bool:
    """True when both sides of the ilpk identity agree to the given orders."""
    lhs, rhs = ilpk_gf_sides(m, x_order, t_order)
    return lhs == rhs

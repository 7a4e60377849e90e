"""Truncated formal Laurent series with an exactly recorded valid range.

A ``QSeries`` knows its coefficients for exponents ``lower <= e < order``;
every coefficient below ``lower`` is zero and nothing is known from ``order``
on. Every operation computes the exact valid range of its result.
"""
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from models.polynomials import SparsePolynomial, YPoly
from models.rings import GaussianRational, divide_scalar
from utils.errors import BadConstantTermError, NonUnitLeadingError, TruncationError


def _is_exact_zero(value) -> bool:
    return not value and getattr(value, "window", None) is None


def coefficient_inverse(value):
    """Inverse of an invertible series coefficient."""
    if isinstance(value, int):
        if value not in (1, -1):
            raise NonUnitLeadingError(f"leading coefficient {value} is not a unit")
        return value
    if isinstance(value, (Fraction, GaussianRational)):
        if not value:
            raise NonUnitLeadingError("leading coefficient is zero")
        return 1 / value
    if isinstance(value, (SparsePolynomial, QSeries)):
        return value.unit_inverse()
    raise NonUnitLeadingError(f"cannot invert coefficient {value!r}")


class QSeries:
    __slots__ = ("var", "lower", "order", "_coeffs")
    _rank = 3
    _default_var = "q"

    def __init__(
        self,
        coeffs: Sequence = (),
        lower: int = 0,
        order: Optional[int] = None,
        var: Optional[str] = None,
    ):
        coeffs = list(coeffs)
        if order is None:
            order = lower + len(coeffs)
        if order < lower:
            order = lower
        length = order - lower
        coeffs = coeffs[:length] + [0] * (length - len(coeffs))
        self.var = var or self._default_var
        self.lower = lower
        self.order = order
        self._coeffs: Tuple = tuple(coeffs)

    def _new(self, coeffs, lower: int, order: int) -> "QSeries":
        return self.__class__(coeffs, lower, order, self.var)

    @classmethod
    def monomial(
        cls, exponent: int, coefficient=1, order: Optional[int] = None, var=None
    ):
        order = exponent + 1 if order is None else order
        return cls([coefficient], exponent, order, var)

    @classmethod
    def from_dict(
        cls, coefficients: Dict[int, object], lower: int, order: int, var=None
    ):
        return cls(
            [coefficients.get(e, 0) for e in range(lower, order)], lower, order, var
        )

    # access

    def coefficient(self, exponent: int):
        if exponent < self.lower:
            return 0
        if exponent >= self.order:
            raise TruncationError(
                f"coefficient of {self.var}^{exponent} is beyond "
                f"the valid order {self.order}"
            )
        return self._coeffs[exponent - self.lower]

    __getitem__ = coefficient

    def items(self) -> Iterator[Tuple[int, object]]:
        return zip(range(self.lower, self.order), self._coeffs)

    @property
    def coeffs(self) -> Tuple:
        return self._coeffs

    def leading_exponent(self) -> Optional[int]:
        for exponent, value in self.items():
            if value != 0:
                return exponent
        return None

    def truncate(self, order: int) -> "QSeries":
        order = min(order, self.order)
        return self._new(self._coeffs[: max(order - self.lower, 0)], self.lower, order)

    def shift(self, exponent: int) -> "QSeries":
        """Multiply by var^exponent."""
        return self._new(self._coeffs, self.lower + exponent, self.order + exponent)

    def map_coefficients(self, function: Callable) -> "QSeries":
        return self._new([function(c) for c in self._coeffs], self.lower, self.order)

    def __bool__(self):
        return any(c != 0 for c in self._coeffs)

    def _is_scalar(self, other) -> bool:
        if isinstance(other, QSeries):
            return other.var != self.var and other._rank < self._rank
        return getattr(other, "_rank", 0) < self._rank

    def _same_kind(self, other) -> bool:
        return isinstance(other, QSeries) and other.var == self.var

    # arithmetic

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __add__(self, other):
        if self._same_kind(other):
            lower = min(self.lower, other.lower)
            order = min(self.order, other.order)
            return self._new(
                [
                    self.coefficient(e) + other.coefficient(e)
                    for e in range(lower, order)
                ],
                lower,
                order,
            )
        if self._is_scalar(other):
            if self.order <= 0:
                return self
            return self + self._new([other], 0, self.order)
        return NotImplemented

    def __radd__(self, other):
        if self._is_scalar(other):
            return self + other
        return NotImplemented

    def __sub__(self, other):
        if self._same_kind(other) or self._is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if self._is_scalar(other):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if self._same_kind(other):
            return self._multiply(other)
        if self._is_scalar(other):
            return self.map_coefficients(lambda c: c * other)
        return NotImplemented

    def __rmul__(self, other):
        if self._is_scalar(other):
            return self.map_coefficients(lambda c: other * c)
        return NotImplemented

    def __truediv__(self, other):
        if self._same_kind(other):
            return self.divide(other)
        if self._is_scalar(other):
            return self.map_coefficients(lambda c: divide_scalar(c, other))
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.invert() ** (-exponent)
        if exponent == 0:
            return self._new([1], 0, max(self.order, 1))
        result = None
        base = self
        while exponent:
            if exponent & 1:
                result = base if result is None else result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def _multiply(self, other: "QSeries") -> "QSeries":
        lower = self.lower + other.lower
        order = min(self.order + other.lower, other.order + self.lower)
        coeffs: List = []
        for e in range(lower, order):
            total = 0
            for i in range(self.lower, e - other.lower + 1):
                a = self._coeffs[i - self.lower]
                if _is_exact_zero(a):
                    continue
                b = other._coeffs[e - i - other.lower]
                if _is_exact_zero(b):
                    continue
                total = total + a * b
            coeffs.append(total)
        return self._new(coeffs, lower, order)

    def times_binomial(self, coefficient, shift: int) -> "QSeries":
        """Multiply by (1 - coefficient * var^shift) for shift >= 1."""
        coeffs = list(self._coeffs)
        for index in range(shift, len(coeffs)):
            previous = self._coeffs[index - shift]
            if not _is_exact_zero(previous):
                coeffs[index] = coeffs[index] - coefficient * previous
        return self._new(coeffs, self.lower, self.order)

    def times_inverse_binomial(self, coefficient, shift: int) -> "QSeries":
        """Multiply by 1 / (1 - coefficient * var^shift) for shift >= 1."""
        coeffs = list(self._coeffs)
        for index in range(shift, len(coeffs)):
            previous = coeffs[index - shift]
            if not _is_exact_zero(previous):
                coeffs[index] = coeffs[index] + coefficient * previous
        return self._new(coeffs, self.lower, self.order)

    def invert(self) -> "QSeries":
        leading = self.leading_exponent()
        if leading is None:
            raise NonUnitLeadingError(f"series is zero up to {self.var}^{self.order}")
        inverse_leading = coefficient_inverse(self.coefficient(leading))
        stripped = [self.coefficient(e) for e in range(leading, self.order)]
        coeffs: List = [inverse_leading]
        for m in range(1, len(stripped)):
            total = 0
            for j in range(1, m + 1):
                value = stripped[j]
                if not _is_exact_zero(value) and not _is_exact_zero(coeffs[m - j]):
                    total = total + value * coeffs[m - j]
            coeffs.append(-(total * inverse_leading))
        return self._new(coeffs, -leading, self.order - 2 * leading)

    def unit_inverse(self) -> "QSeries":
        return self.invert()

    def divide(self, divisor: "QSeries") -> "QSeries":
        """Long division self / divisor by a series with a unit leading coefficient."""
        leading = divisor.leading_exponent()
        if leading is None:
            raise NonUnitLeadingError(
                f"divisor is zero up to {self.var}^{divisor.order}"
            )
        inverse_leading = coefficient_inverse(divisor.coefficient(leading))
        stripped = [divisor.coefficient(e) for e in range(leading, divisor.order)]
        order = min(self.order, len(stripped) + self.lower)
        coeffs: List = []
        for m in range(self.lower, order):
            total = self._coeffs[m - self.lower]
            for j in range(1, m - self.lower + 1):
                value = stripped[j]
                previous = coeffs[m - j - self.lower]
                if not _is_exact_zero(value) and not _is_exact_zero(previous):
                    total = total - value * previous
            coeffs.append(total * inverse_leading)
        return self._new(coeffs, self.lower - leading, order - leading)

    # comparison and rendering

    def __eq__(self, other):
        if self._same_kind(other):
            lower = min(self.lower, other.lower)
            order = min(self.order, other.order)
            return all(
                self.coefficient(e) == other.coefficient(e) for e in range(lower, order)
            )
        if self._is_scalar(other):
            if self.order <= 0:
                return all(c == 0 for c in self._coeffs)
            return self == self._new([other], 0, self.order)
        return NotImplemented

    __hash__ = None

    def __str__(self):
        parts = []
        for exponent, value in self.items():
            if value == 0:
                continue
            if exponent == 0:
                parts.append(f"({value})")
            else:
                parts.append(f"({value}){self.var}^{exponent}")
        parts.append(f"O({self.var}^{self.order})")
        return " + ".join(parts)

    def __repr__(self):
        return f"{self.__class__.__name__}({self})"

    def to_dict(self) -> dict:
        return {
            "var": self.var,
            "lower": self.lower,
            "order": self.order,
            "coeffs": [str(c) for c in self._coeffs],
        }


class VSeries(QSeries):
    """Laurent series in v whose coefficients are q-series."""

    __slots__ = ()
    _rank = 4
    _default_var = "v"


def log_series(series: QSeries) -> QSeries:
    """Logarithm of a series with constant term 1."""
    if any(c != 0 for e, c in series.items() if e < 0):
        raise BadConstantTermError("log needs a series without negative powers")
    if series.order <= 0 or series.coefficient(0) != 1:
        raise BadConstantTermError("log needs constant term 1")
    f = [series.coefficient(m) for m in range(series.order)]
    logs: List = [0]
    for m in range(1, series.order):
        total = m * f[m]
        for k in range(1, m):
            if not _is_exact_zero(logs[k]) and not _is_exact_zero(f[m - k]):
                total = total - k * logs[k] * f[m - k]
        logs.append(divide_scalar(total, m))
    return series._new(logs, 0, series.order)


def exp_series(series: QSeries) -> QSeries:
    """Exponential of a series with constant term 0."""
    if any(c != 0 for e, c in series.items() if e < 0):
        raise BadConstantTermError("exp needs a series without negative powers")
    if series.order > 0 and series.coefficient(0) != 0:
        raise BadConstantTermError("exp needs constant term 0")
    f = [series.coefficient(m) if m < series.order else 0 for m in range(series.order)]
    exps: List = [1]
    for m in range(1, series.order):
        total = 0
        for k in range(1, m + 1):
            if not _is_exact_zero(f[k]) and not _is_exact_zero(exps[m - k]):
                total = total + k * f[k] * exps[m - k]
        exps.append(divide_scalar(total, m))
    return series._new(exps, 0, max(series.order, 1))


def substitute_y_exp_iv(polynomial: YPoly, vorder: int) -> VSeries:
    """Expand an exact y-Laurent polynomial at y = e^{iv} through v^(vorder-1)."""
    if not polynomial.is_exact():
        raise TruncationError("y = e^{iv} needs an exact y-polynomial")
    coeffs: List = []
    for s in range(vorder):
        total = 0
        for exponent, value in polynomial.items():
            if exponent == 0 and s > 0:
                continue
            weight = GaussianRational(0, exponent) ** s / factorial(s)
            total = total + value * weight
        coeffs.append(total)
    return VSeries(coeffs, 0, vorder)


def transpose_to_y(series: QSeries) -> YPoly:
    """Rewrite an exact q-series of y-polynomials as a y-polynomial of q-series."""
    columns: Dict[int, Dict[int, object]] = {}
    for exponent, value in series.items():
        if value == 0:
            continue
        if not isinstance(value, YPoly) or not value.is_exact():
            raise TruncationError("transpose needs exact y-polynomial coefficients")
        for y_exponent, coefficient in value.items():
            columns.setdefault(y_exponent, {})[exponent] = coefficient
    return YPoly(
        {
            y_exponent: QSeries.from_dict(
                column, series.lower, series.order, series.var
            )
            for y_exponent, column in columns.items()
        }
    )

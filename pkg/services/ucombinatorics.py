import logging
from enum import Enum
from functools import lru_cache
from typing import Dict, Tuple

from models.polynomials import UPoly
from models.series import QSeries
from utils.errors import NonExactDivisionError, UnsupportedRankError


class MatrixKind(str, Enum):
    A = "A"
    B = "B"
    P = "P"


@lru_cache(maxsize=None)
def _u_integer(n: int) -> UPoly:
    if n >= 0:
        return UPoly.from_coefficients([1] * n)
    # [-n] = -u^{-n} [n]
    return -_u_integer(-n).shift(n)


@lru_cache(maxsize=None)
def _u_factorial(n: int) -> UPoly:
    if n == 0:
        return UPoly.constant(1)
    return _u_factorial(n - 1) * _u_integer(n)


@lru_cache(maxsize=None)
def _u_binomial(n: int, k: int) -> UPoly:
    if k < 0 or n < 0 or k > n:
        return UPoly()
    if k == 0 or k == n:
        return UPoly.constant(1)
    # [[n, k]] = [[n-1, k]] + u^{n-k} [[n-1, k-1]]
    return _u_binomial(n - 1, k) + _u_binomial(n - 1, k - 1).shift(n - k)


@lru_cache(maxsize=None)
def _sym_u_binomial(n: int, k: int) -> UPoly:
    if k < 0:
        return UPoly()
    if n >= 0:
        if k > n:
            return UPoly()
        return UPoly.from_doubled(-k * (n - k)) * _u_binomial(n, k)
    sign = -1 if k % 2 else 1
    return sign * _sym_u_binomial(-n + k - 1, k)


@lru_cache(maxsize=None)
def _matrix_entry(kind: MatrixKind, n: int, i: int, j: int) -> UPoly:
    if j < i or (j - i) % 2:
        return UPoly()
    k, ell = i, (j - i) // 2
    if kind == MatrixKind.A:
        return _u_binomial(k + ell, n) * _u_binomial(k + 2 * ell, ell)
    if kind == MatrixKind.B:
        if ell == 0:
            return UPoly.constant(1)
        sign = -1 if ell % 2 else 1
        numerator = _u_integer(k + 2 * ell) * _u_binomial(k + ell, ell)
        quotient = _divide(numerator, _u_integer(k + ell))
        return sign * quotient.shift(ell * (ell - 1) // 2)
    if n == 0:
        return UPoly.constant(1) if ell == 0 else UPoly()
    numerator = (
        _u_integer(k + 2 * ell)
        * _u_binomial(n + ell, n)
        * _u_binomial(k + ell - 1, n - 1)
    )
    return _divide(numerator, _u_integer(n + ell)).shift(ell * ell + ell * (k - n))


def _divide(numerator: UPoly, denominator: UPoly) -> UPoly:
    if not numerator:
        return UPoly()
    try:
        return numerator.exact_divide(denominator)
    except ValueError as exc:
        raise NonExactDivisionError(f"{numerator} / {denominator}") from exc


class UCombinatoricsService:
    @staticmethod
    def u_integer(n: int) -> UPoly:
        """[n] = 1 + u + ... + u^(n-1), extended to n < 0 by [-n] = -u^(-n)[n]."""
        return _u_integer(n)

    @staticmethod
    def u_factorial(n: int) -> UPoly:
        if n < 0:
            raise ValueError(f"u-factorial needs n >= 0, got {n}")
        return _u_factorial(n)

    @staticmethod
    def u_binomial(n: int, k: int) -> UPoly:
        """Gaussian binomial [[n, k]]; zero when k < 0, n < 0 or k > n."""
        return _u_binomial(n, k)

    @staticmethod
    def sym_u_binomial(n: int, k: int) -> UPoly:
        """Palindromic binomial u^(-k(n-k)/2) [[n, k]], extended to n < 0."""
        return _sym_u_binomial(n, k)

    @staticmethod
    def k_series(n: int, t_cutoff: int) -> QSeries:
        """K_n(t) = prod_{s<n} (1 + t u^{s-(n-1)/2}) as a t-series; K_{-n} = 1 / K_n."""
        size = abs(n)
        series = QSeries([1], 0, t_cutoff + 1, var="t")
        for s in range(size):
            factor = QSeries(
                [1, UPoly.from_doubled(2 * s - (size - 1))], 0, t_cutoff + 1, var="t"
            )
            series = series * factor
        if n < 0:
            series = series.invert()
        return series

    @staticmethod
    def matrix_entry(kind: MatrixKind, n: int, i: int, j: int) -> UPoly:
        """Entry (i, j) of A(n), B or the closed form P(n) = A(n) B."""
        if i < 0 or j < 0:
            raise ValueError(f"matrix indices must be >= 0, got ({i}, {j})")
        if n < 0:
            raise UnsupportedRankError(f"matrix rank must be >= 0, got {n}")
        kind = MatrixKind(kind)
        return _matrix_entry(kind, 0 if kind == MatrixKind.B else n, i, j)

    @staticmethod
    def matrix_product_entry(
        left: MatrixKind, right: MatrixKind, n: int, i: int, j: int
    ) -> UPoly:
        """Entry (i, j) of left(n) * right(n) for upper triangular band matrices."""
        total = UPoly()
        for m in range(i, j + 1, 2):
            a = UCombinatoricsService.matrix_entry(left, n, i, m)
            if not a:
                continue
            total = total + a * UCombinatoricsService.matrix_entry(right, n, m, j)
        return total

    @staticmethod
    def c_table(n: int, r: int) -> Dict[Tuple[int, int], UPoly]:
        """Coefficients C^r_n(i, j), 1 <= i <= n, 0 <= j <= n - i."""
        if n < 1:
            raise UnsupportedRankError(f"C table needs n >= 1, got {n}")
        return dict(_c_table(n, r))


@lru_cache(maxsize=None)
def _c_table(n: int, r: int) -> Tuple[Tuple[Tuple[int, int], UPoly], ...]:
    if n == 1:
        return (((1, 0), UPoly.constant(1)),)
    previous = dict(_c_table(n - 1, r))
    m = n - 1
    up = UPoly.from_doubled(2 * (r - m))
    down = UPoly.from_doubled(2 * (m - r))
    table = []
    for i in range(1, n + 1):
        for j in range(0, n - i + 1):
            value = (
                previous.get((i - 1, j), UPoly())
                + previous.get((i + 1, j - 1), UPoly())
                - up * previous.get((i, j - 1), UPoly())
                - down * previous.get((i, j), UPoly())
            )
            if value:
                table.append(((i, j), value))
    logging.debug("C table n=%d r=%d has %d nonzero entries", n, r, len(table))
    return tuple(table)

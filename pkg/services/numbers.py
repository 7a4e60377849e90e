from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Tuple


@lru_cache(maxsize=None)
def _bernoulli_table(m: int) -> Tuple[Fraction, ...]:
    table: List[Fraction] = [Fraction(1)]
    for index in range(1, m + 1):
        total = sum(comb(index + 1, k) * table[k] for k in range(index))
        table.append(-total / (index + 1))
    return tuple(table)


@lru_cache(maxsize=None)
def _secant_table(n: int) -> Tuple[int, ...]:
    table: List[int] = [1]
    for index in range(1, n + 1):
        if index % 2:
            table.append(0)
            continue
        total = sum(
            comb(index, j) * (-1) ** (j // 2) * table[index - j]
            for j in range(2, index + 1, 2)
        )
        table.append(-total)
    return tuple(table)


class NumberService:
    @staticmethod
    def bernoulli(m: int) -> Fraction:
        """Bernoulli number B_m with B_1 = -1/2 (coefficients of t/(e^t - 1))."""
        if m < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {m}")
        return _bernoulli_table(m)[m]

    @staticmethod
    def secant_number(n: int) -> int:
        """Coefficient e_n of 1/cos(t) = sum e_n t^n / n!."""
        if n < 0:
            raise ValueError(f"secant index must be >= 0, got {n}")
        return _secant_table(n)[n]

    @staticmethod
    def binomial(n: int, k: int) -> int:
        """Generalized binomial coefficient, valid for negative n."""
        if k < 0:
            return 0
        if n >= 0:
            return comb(n, k)
        return (-1) ** k * comb(k - n - 1, k)

    @staticmethod
    def divisor_sigma(w: int, n: int) -> int:
        if n < 1:
            raise ValueError(f"divisor sums are defined for n >= 1, got {n}")
        return sum(d**w for d in NumberService.divisors(n))

    @staticmethod
    @lru_cache(maxsize=None)
    def divisors(n: int) -> Tuple[int, ...]:
        small, large = [], []
        d = 1
        while d * d <= n:
            if n % d == 0:
                small.append(d)
                if d * d != n:
                    large.append(n // d)
            d += 1
        return tuple(small + large[::-1])

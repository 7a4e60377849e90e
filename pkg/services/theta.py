import logging
from typing import Dict, Optional

from models.monomial import Monomial
from models.polynomials import UPoly, YPoly
from models.series import QSeries
from services.numbers import NumberService
from utils.errors import TruncationError

ONE = YPoly.constant(UPoly.constant(1))


def _one(qorder: int) -> QSeries:
    return QSeries([ONE], 0, max(qorder, 0))


def restrict_window(series: QSeries, ywin: Optional[int]) -> QSeries:
    if ywin is None:
        return series
    return series.map_coefficients(
        lambda c: c.restrict(ywin) if isinstance(c, YPoly) else YPoly.constant(c, ywin)
    )


def _power_bound(x: Monomial, ywin: int, uwin: Optional[int]) -> int:
    """Largest p such that x^p can still land inside the windows."""
    if x.y:
        return ywin // abs(x.y)
    if uwin is not None and x.u2:
        return 2 * uwin // abs(x.u2)
    raise TruncationError(f"powers of {x} never leave the y-window")


class ThetaService:
    @staticmethod
    def pochhammer(
        a: Monomial, q_shift: int, qorder: int, ywin: Optional[int] = None
    ) -> QSeries:
        """prod_{n >= q_shift} (1 - a q^n) up to q^qorder."""
        series = _one(qorder)
        factor = a.to_ypoly()
        for n in range(q_shift, qorder):
            if n == 0:
                series = series * (ONE - factor)
            else:
                series = series.times_binomial(factor, n)
        return restrict_window(series, ywin)

    @staticmethod
    def theta(x: Monomial, qorder: int, ywin: Optional[int] = None) -> QSeries:
        """Theta(x; q) = (q; q)(x; q)(q/x; q)."""
        series = (
            ThetaService.pochhammer(Monomial(), 1, qorder)
            * ThetaService.pochhammer(x, 0, qorder)
            * ThetaService.pochhammer(x.inverse(), 1, qorder)
        )
        return restrict_window(series, ywin)

    @staticmethod
    def phi_bilateral(
        a: Monomial,
        b: Monomial,
        qorder: int,
        ywin: int,
        uwin: Optional[int] = None,
    ) -> QSeries:
        """sum over sign(i) = sign(j) of sign(i) a^i b^j q^(ij), sign(0) = +1."""
        rows: Dict[int, Dict[int, UPoly]] = {m: {} for m in range(qorder)}

        def add(m: int, i: int, j: int, sign: int):
            term = a**i * b**j
            if abs(term.y) > ywin:
                return
            if uwin is not None and abs(term.u2) > 2 * uwin:
                return
            row = rows[m]
            row[term.y] = row.get(term.y, UPoly()) + UPoly.from_doubled(term.u2, sign)

        for m in range(qorder):
            if m == 0:
                for j in range(_power_bound(b, ywin, uwin) + 1):
                    add(0, 0, j, 1)
                for i in range(1, _power_bound(a, ywin, uwin) + 1):
                    add(0, i, 0, 1)
                continue
            for i in NumberService.divisors(m):
                add(m, i, m // i, 1)
                add(m, -i, -(m // i), -1)
        logging.debug("bilateral sum %s, %s to q^%d, |y| <= %d", a, b, qorder, ywin)
        return QSeries([YPoly(rows[m], ywin) for m in range(qorder)], 0, qorder)

    @staticmethod
    def psi(x: Monomial, y: Monomial, qorder: int, ywin: int) -> QSeries:
        """sum over l >= 0, p >= 1 of (x^p - x^-l) y^(p-l) q^(pl)."""
        rows: Dict[int, Dict[int, UPoly]] = {m: {} for m in range(qorder)}

        def add(m: int, term: Monomial, sign: int):
            if abs(term.y) <= ywin:
                row = rows[m]
                value = UPoly.from_doubled(term.u2, sign)
                row[term.y] = row.get(term.y, UPoly()) + value

        if qorder > 0 and not x.is_trivial():
            growth = [step for step in (x.y + y.y, y.y) if step]
            if len(growth) < 2:
                raise TruncationError(f"psi({x}, {y}) does not truncate in y")
            bound = max(ywin // abs(step) for step in growth)
            for p in range(1, bound + 1):
                add(0, x**p * y**p, 1)
                add(0, y**p, -1)
        for m in range(1, qorder if not x.is_trivial() else 0):
            for ell in NumberService.divisors(m):
                p = m // ell
                add(m, x**p * y ** (p - ell), 1)
                add(m, x ** (-ell) * y ** (p - ell), -1)
        return QSeries([YPoly(rows[m], ywin) for m in range(qorder)], 0, max(qorder, 0))

    @staticmethod
    def phi_product(k: int, l: int, qorder: int) -> QSeries:
        """Product kernel Phi(u^k, u^l y; q), exact in y and u at every q-power."""
        series = _one(qorder)
        u_k = Monomial(2 * k, 0)
        numerator = [Monomial(), Monomial(), u_k, u_k.inverse()]
        y_l = Monomial(2 * l, 1)
        denominator = [y_l, y_l.inverse(), u_k * y_l, (u_k * y_l).inverse()]
        for n in range(1, qorder):
            for factor in numerator:
                series = series.times_binomial(factor.to_ypoly(), n)
            for factor in denominator:
                series = series.times_inverse_binomial(factor.to_ypoly(), n)
        return series

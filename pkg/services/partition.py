import logging
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from models.monomial import Monomial
from models.mukai import MukaiVector
from models.partition import PartitionFunction, Route, TableCell
from models.polynomials import U_MINUS_ONE, TTPoly, UPoly, YPoly
from models.reports import Verdict
from models.rings import divide_scalar
from models.series import QSeries
from services.numbers import NumberService
from services.theta import ThetaService, restrict_window
from services.ucombinatorics import MatrixKind, UCombinatoricsService
from utils.comparison import compare
from utils.errors import (
    IdentityMismatchError,
    InternalNonExactDivisionError,
    NegativeDimensionError,
    NotDivisibleError,
    UnsupportedRankError,
)

# (a, b, h^{a+1,b+1}) for the Hodge diamond of a K3 surface, centred at (1, 1)
_K3_HODGE = ((-1, -1, 1), (1, -1, 1), (0, 0, 20), (-1, 1, 1), (1, 1, 1))
_BUCKET = 8


@lru_cache(maxsize=None)
def _goettsche_product(order: int) -> QSeries:
    """prod_n prod (1 - t^a tb^b Q^n)^(-h) in Q = t tb q, over the K3 diamond."""
    series = QSeries([TTPoly.constant(1)], 0, order)
    for n in range(1, order):
        for a, b, multiplicity in _K3_HODGE:
            factor = TTPoly.monomial(a, b)
            for _ in range(multiplicity):
                series = series.times_inverse_binomial(factor, n)
    return series


def _goettsche(order: int) -> QSeries:
    bucket = _BUCKET * (order // _BUCKET + 1)
    return _goettsche_product(bucket).truncate(order)


def _check_ranks(n: int, r: int):
    if n < 1:
        raise UnsupportedRankError(f"section rank must be >= 1, got n={n}")
    if r < 0 or r > n:
        raise UnsupportedRankError(
            f"sheaf rank must satisfy 0 <= r <= n, got r={r}, n={n}"
        )


def _empty_rows(qorder: int) -> Dict[int, Dict[int, object]]:
    return {m: {} for m in range(qorder)}


def _accumulate(rows, m: int, y: int, value, zero=UPoly):
    row = rows[m]
    row[y] = row.get(y, zero()) + value


def _rows_to_series(rows, qorder: int, ywin: Optional[int]) -> QSeries:
    return QSeries([YPoly(rows[m], ywin) for m in range(qorder)], 0, max(qorder, 0))


class PartitionService:
    # Mukai lattice

    @staticmethod
    def mukai_pairing(v: MukaiVector, w: MukaiVector) -> int:
        """(v, w) = v_1 w_1 - v_0 w_2 - v_2 w_0 with D^2 = 2g - 2."""
        divisor_term = 0
        if v.d and w.d:
            if v.genus != w.genus:
                raise ValueError(
                    f"cannot pair classes of genus {v.genus} and {w.genus}"
                )
            divisor_term = v.d * w.d * v.self_intersection
        return divisor_term - v.r * w.a - v.a * w.r

    @staticmethod
    def moduli_dim(v: MukaiVector) -> int:
        dimension = 2 + PartitionService.mukai_pairing(v, v)
        expected = 2 * (v.d**2 * (v.genus - 1) + 1 - v.r * v.a)
        if dimension != expected:
            raise IdentityMismatchError(
                "moduli dimension", {"v": str(v), "found": str(dimension)}
            )
        if dimension < 0:
            raise NegativeDimensionError(dimension)
        return dimension

    # Hilbert schemes and the matrix route

    @staticmethod
    def hilb_hodge(m: int) -> TTPoly:
        """Hodge polynomial of the Hilbert scheme of m points on a K3 surface."""
        if m < 0:
            return TTPoly()
        return _goettsche(m + 1).coefficient(m).shift(m, m)

    @staticmethod
    def s_series(qorder: int) -> QSeries:
        """S = sum_g hilb_hodge(g) (t tb)^(-g) q^(g-1), valid below q^qorder."""
        if qorder < 0:
            raise ValueError(f"qorder must be >= 0, got {qorder}")
        return _goettsche(qorder + 1).shift(-1)

    @staticmethod
    def euler_s_series(qorder: int) -> QSeries:
        return PartitionService.s_series(qorder).map_coefficients(
            lambda value: value.evaluate_at_one() if value else 0
        )

    @staticmethod
    def syst_hodge(n: int, r: int, g: int, k: int) -> TTPoly:
        """Hodge polynomial of Syst^n(r, D_g, k + r)."""
        _check_ranks(n, r)
        if k < 0:
            return PartitionService.syst_hodge(n, n - r, g, -k)
        total = TTPoly()
        ell = r
        while ell * ell + ell * k <= g:
            entry = UCombinatoricsService.matrix_entry(
                MatrixKind.P, n, k + 2 * r, k + 2 * ell
            )
            if entry:
                hilbert = PartitionService.hilb_hodge(g - ell * ell - ell * k)
                total = total + entry.embed() * hilbert
            ell += 1
        return total

    @staticmethod
    def kernel_series(n: int, r: int, qorder: int, ywin: int) -> QSeries:
        """H^r_n with F^r_n = S * H^r_n, summed over both signs of the y-exponent."""
        _check_ranks(n, r)
        rows = _empty_rows(qorder)

        def add(k: int, y: int, start: int, row_index: int):
            ell = start
            while ell * k + ell * ell < qorder:
                m = ell * k + ell * ell
                entry = UCombinatoricsService.matrix_entry(
                    MatrixKind.P, n, row_index, k + 2 * ell
                )
                if entry:
                    _accumulate(rows, m, y, entry.shift(-m))
                ell += 1

        for k in range(0, ywin + 1):
            add(k, k, r, k + 2 * r)
        for k in range(1, ywin + 1):
            add(k, -k, n - r, k - 2 * r + 2 * n)
        return _rows_to_series(rows, qorder, ywin)

    @staticmethod
    def f_via_matrices(n: int, r: int, qorder: int, ywin: int) -> PartitionFunction:
        """F^r_n = S * H^r_n over the Hodge ring, valid for q^-1 .. q^(qorder-1)."""
        logging.info(
            "matrix route for F, n=%d r=%d qorder=%d ywin=%d", n, r, qorder, ywin
        )
        kernel = PartitionService.kernel_series(n, r, qorder + 1, ywin)
        embedded = kernel.map_coefficients(
            lambda row: row.map_coefficients(lambda poly: poly.embed())
        )
        series = PartitionService.s_series(qorder) * embedded
        return PartitionFunction(
            n=n, r=r, route=Route.F, qorder=qorder, ywin=ywin, series=series
        )

    @staticmethod
    def g_via_matrices(n: int, r: int, qorder: int, ywin: int) -> PartitionFunction:
        f = PartitionService.f_via_matrices(n, r, qorder, ywin).series
        quotient = f.divide(PartitionService.s_series(qorder)).truncate(qorder)
        series = quotient.map_coefficients(
            lambda row: row.map_coefficients(lambda poly: poly.diagonal())
        )
        return PartitionFunction(
            n=n, r=r, route=Route.MATRICES, qorder=qorder, ywin=ywin, series=series
        )

    # closed forms

    @staticmethod
    def g_closed(n: int, r: int, qorder: int, ywin: int) -> PartitionFunction:
        _check_ranks(n, r)
        logging.info(
            "closed form for G, n=%d r=%d qorder=%d ywin=%d", n, r, qorder, ywin
        )
        u_integer = UCombinatoricsService.u_integer
        u_binomial = UCombinatoricsService.u_binomial
        rows = _empty_rows(qorder)
        bound = ywin + qorder + 1
        for p in range(n - r, bound):
            for ell in range(r, bound):
                m = p * ell
                if m >= qorder or abs(p - ell) > ywin:
                    continue
                term = (
                    u_integer(p + ell)
                    * u_binomial(n + ell - r - 1, n - 1)
                    * u_binomial(p + r - 1, n - 1)
                )
                if term:
                    shift = r * (n - r) - n * ell - (p - ell) * r
                    _accumulate(rows, m, p - ell, term.shift(shift))
        normalizer = u_integer(n)
        for m, row in rows.items():
            for y, numerator in row.items():
                try:
                    quotient = numerator.exact_divide(normalizer)
                except NotDivisibleError as exc:
                    raise InternalNonExactDivisionError(
                        f"closed form at q^{m} y^{y} is not divisible by [{n}]"
                    ) from exc
                if not quotient.has_integer_exponents():
                    raise InternalNonExactDivisionError(
                        f"closed form at q^{m} y^{y} has half-integer u-exponents"
                    )
                row[y] = quotient
        return PartitionFunction(
            n=n,
            r=r,
            route=Route.CLOSED,
            qorder=qorder,
            ywin=ywin,
            series=_rows_to_series(rows, qorder, ywin),
        )

    @staticmethod
    def modus_numerator(n: int, r: int, qorder: int, ywin: int) -> QSeries:
        """sum C^r_n(i, j) Psi(u^i, u^(j-r) y) before normalization."""
        _check_ranks(n, r)
        total = _rows_to_series(_empty_rows(qorder), qorder, ywin)
        for (i, j), coefficient in UCombinatoricsService.c_table(n, r).items():
            kernel = ThetaService.psi(
                Monomial(2 * i, 0), Monomial(2 * (j - r), 1), qorder, ywin
            )
            total = total + kernel * coefficient
        return total

    @staticmethod
    def g_via_modus(n: int, r: int, qorder: int, ywin: int) -> PartitionFunction:
        logging.info(
            "theta route for G, n=%d r=%d qorder=%d ywin=%d", n, r, qorder, ywin
        )
        numerator = PartitionService.modus_numerator(n, r, qorder, ywin)
        vanishing = U_MINUS_ONE ** (2 * n - 1)
        normalizer = UCombinatoricsService.u_integer(
            n
        ) * UCombinatoricsService.u_factorial(n - 1) ** 2
        rows = _empty_rows(qorder)
        for m, row in numerator.items():
            for y, value in row.items():
                try:
                    reduced = value.exact_divide(vanishing)
                except NotDivisibleError as exc:
                    raise NotDivisibleError(
                        f"theta combination at q^{m} y^{y} is not divisible "
                        f"by (u-1)^{2 * n - 1}"
                    ) from exc
                try:
                    rows[m][y] = reduced.shift(r * (n - r)).exact_divide(normalizer)
                except NotDivisibleError as exc:
                    raise InternalNonExactDivisionError(
                        f"theta combination at q^{m} y^{y} "
                        f"is not divisible by {normalizer}"
                    ) from exc
        return PartitionFunction(
            n=n,
            r=r,
            route=Route.MODUS,
            qorder=qorder,
            ywin=ywin,
            series=_rows_to_series(rows, qorder, ywin),
        )

    @staticmethod
    def modus_q0_denominator(n: int) -> YPoly:
        """prod_{a=-n}^{0} (1 - u^a y), clearing the q^0 row of G^n_n."""
        product = YPoly.constant(UPoly.constant(1))
        for a in range(-n, 1):
            product = product * (
                YPoly.constant(UPoly.constant(1)) - Monomial(2 * a, 1).to_ypoly()
            )
        return product

    @staticmethod
    def euler_g(n: int, r: int, qorder: int, ywin: int) -> QSeries:
        """g^r_n = G^r_n at u = 1, from the integer closed form."""
        _check_ranks(n, r)
        binomial = NumberService.binomial
        rows = _empty_rows(qorder)
        bound = ywin + qorder + 1
        for p in range(n - r, bound):
            for ell in range(r, bound):
                m = p * ell
                if m >= qorder or abs(p - ell) > ywin:
                    continue
                term = (
                    (p + ell)
                    * binomial(n + ell - r - 1, n - 1)
                    * binomial(p + r - 1, n - 1)
                )
                if term:
                    _accumulate(rows, m, p - ell, term, zero=int)
        for row in rows.values():
            for y, value in row.items():
                row[y] = divide_scalar(value, n)
        return _rows_to_series(rows, qorder, ywin)

    @staticmethod
    def series(
        route: Route, n: int, r: int, qorder: int, ywin: int
    ) -> PartitionFunction:
        route = Route(route)
        if route == Route.CLOSED:
            return PartitionService.g_closed(n, r, qorder, ywin)
        if route == Route.MATRICES:
            return PartitionService.g_via_matrices(n, r, qorder, ywin)
        if route == Route.MODUS:
            return PartitionService.g_via_modus(n, r, qorder, ywin)
        if route == Route.F:
            return PartitionService.f_via_matrices(n, r, qorder, ywin)
        return PartitionFunction(
            n=n,
            r=r,
            route=Route.EULER,
            qorder=qorder,
            ywin=ywin,
            series=PartitionService.euler_g(n, r, qorder, ywin),
        )

    @staticmethod
    def ky_product(qorder: int, ywin: int) -> Tuple[Verdict, QSeries, QSeries]:
        """(1 - u y)(1 - y^-1) G^0_1 = -Phi(u, y) on |y| <= ywin."""
        closed = PartitionService.g_closed(1, 0, qorder, ywin + 1).series
        one = UPoly.constant(1)
        clearing = YPoly({-1: -one, 0: one + UPoly.monomial(1), 1: -UPoly.monomial(1)})
        lhs = closed * clearing
        rhs = -restrict_window(ThetaService.phi_product(1, 0, qorder), ywin)
        verdict = compare("rank-one product formula", lhs, rhs)
        return verdict, lhs, rhs

    # Brill-Noether strata

    @staticmethod
    def generic_stratum_hodge(ell: int, k: int, g: int) -> TTPoly:
        """Entry of B * M(g): the generic stratum of M(ell, D_g, k + ell)."""
        total = TTPoly()
        m = 0
        while (ell + m) ** 2 + (ell + m) * k <= g:
            entry = UCombinatoricsService.matrix_entry(
                MatrixKind.B, 0, k + 2 * ell, k + 2 * ell + 2 * m
            )
            hilbert = PartitionService.hilb_hodge(g - (ell + m) ** 2 - (ell + m) * k)
            total = total + entry.embed() * hilbert
            m += 1
        return total

    @staticmethod
    def stratum_hodge(ell: int, k: int, g: int, s: int) -> TTPoly:
        """Stratum of M(ell, D_g, k + ell) with k + 2 ell + s sections."""
        if min(ell, k, g, s) < 0:
            raise ValueError("stratum indices must be >= 0")
        grassmannian = UCombinatoricsService.u_binomial(k + 2 * ell + 2 * s, s)
        return grassmannian.embed() * PartitionService.generic_stratum_hodge(
            ell + s, k, g
        )

    @staticmethod
    def syst_stratum_hodge(n: int, ell: int, k: int, g: int, s: int) -> TTPoly:
        sections = UCombinatoricsService.u_binomial(k + 2 * ell + s, n)
        return sections.embed() * PartitionService.stratum_hodge(ell, k, g, s)

    @staticmethod
    def strata_range(ell: int, k: int, g: int) -> range:
        s = 0
        while (ell + s) ** 2 + (ell + s) * k <= g:
            s += 1
        return range(s)

    # tables

    @staticmethod
    def hodge_twist(poly: TTPoly) -> Optional[int]:
        """d with h^{p,q} = h^{d-p,d-q} and all h^{p,q} >= 0, else None."""
        if not poly:
            return None
        if any(not isinstance(value, int) or value < 0 for _, value in poly.items()):
            return None
        (top_a, top_b), (low_a, low_b) = poly.degree(), poly.low_degree()
        twist = top_a + low_a
        if top_b + low_b != twist:
            return None
        for (a, b), value in poly.items():
            if poly.coefficient((twist - a, twist - b)) != value:
                return None
        return twist

    @staticmethod
    def table_cells(
        n: int, r: int, gmax: int, kmin: int, kmax: int, hodge: bool = False
    ) -> List[TableCell]:
        _check_ranks(n, r)
        cells = []
        for g in range(0, gmax + 1):
            for k in range(kmin, kmax + 1):
                poly = PartitionService.syst_hodge(n, r, g, k)
                value = str(poly) if hodge else poly.evaluate_at_one()
                cells.append(TableCell(n=n, r=r, g=g, k=k, value=value))
        logging.info("table n=%d r=%d has %d cells", n, r, len(cells))
        return cells

    @staticmethod
    def table_consistency(n: int, r: int, gmax: int, ywin: int) -> Verdict:
        """Every cell equals (t tb)^g times the q^(g-1) y^k coefficient of F^r_n."""
        f = PartitionService.f_via_matrices(n, r, gmax + 1, ywin).series
        for g in range(0, gmax + 1):
            row = f.coefficient(g - 1)
            for k in range(-ywin, ywin + 1):
                cell = PartitionService.syst_hodge(n, r, g, k)
                coefficient = row.coefficient(k)
                if coefficient:
                    coefficient = coefficient.shift(g, g)
                verdict = compare(f"table cells n={n} r={r}", cell, coefficient)
                if not verdict.passed:
                    return Verdict(
                        identity=verdict.identity,
                        passed=False,
                        location={"g": str(g), "k": str(k), **verdict.location},
                        detail=verdict.detail,
                    )
        return Verdict(identity=f"table cells n={n} r={r}", passed=True)

import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Tuple

from config import config
from models.modular import BasisElement, EisensteinBasis
from models.polynomials import UPoly, YPoly
from models.reports import CombinationTerm, FitReport, Verdict
from models.rings import I_UNIT, GaussianRational
from models.series import QSeries, VSeries, exp_series, log_series, substitute_y_exp_iv
from services.linalg import LinearAlgebraService
from services.numbers import NumberService
from services.partition import PartitionService
from services.theta import ThetaService
from utils.comparison import compare
from utils.errors import (
    FitWindowError,
    NoSolutionError,
    ValidationFailureError,
)


def _check_order(name: str, value: int):
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")


def v_expand(series: QSeries, vorder: int) -> VSeries:
    """Substitute y = e^{iv} into a q-series of exact y-polynomials."""
    columns: Dict[int, Dict[int, object]] = {s: {} for s in range(vorder)}
    for exponent, value in series.items():
        if value == 0:
            continue
        expansion = substitute_y_exp_iv(value, vorder)
        for s, coefficient in expansion.items():
            columns[s][exponent] = coefficient
    return VSeries(
        [
            QSeries.from_dict(columns[s], series.lower, series.order)
            for s in range(vorder)
        ],
        0,
        vorder,
    )


def _scalar_v_series(coeffs, vorder: int) -> VSeries:
    return VSeries(list(coeffs)[:vorder], 0, vorder)


def _exp_iv(n: int, vorder: int) -> VSeries:
    """e^{inv} as a v-series."""
    return _scalar_v_series(
        (GaussianRational(0, n) ** m / factorial(m) for m in range(vorder)), vorder
    )


def _bernoulli_generating(sign: int, vorder: int) -> VSeries:
    """sum B_m (i sign v)^m / m! = (i sign v) / (e^{i sign v} - 1)."""
    unit = GaussianRational(0, sign)
    return _scalar_v_series(
        (
            NumberService.bernoulli(m) * unit**m / factorial(m)
            for m in range(vorder)
        ),
        vorder,
    )


def _generator_name(weight: int) -> str:
    return f"E{weight}" if weight % 2 == 0 else f"E{weight}q2"


def _monomial_name(generators: List[Tuple[int, QSeries]], exponents) -> str:
    factors = []
    for (weight, _), power in zip(generators, exponents):
        if power == 1:
            factors.append(_generator_name(weight))
        elif power:
            factors.append(f"{_generator_name(weight)}^{power}")
    return "*".join(factors) or "1"


@lru_cache(maxsize=None)
def _eisenstein_basis(weight_bound: int, qorder: int) -> EisensteinBasis:
    generators = [
        (weight, ModularityService.eisenstein(weight, qorder))
        for weight in range(2, weight_bound + 1)
    ]
    found: List[Tuple[int, Tuple[int, ...], QSeries]] = []

    def extend(index: int, weight: int, exponents: Tuple[int, ...], series: QSeries):
        if index == len(generators):
            found.append((weight, exponents, series))
            return
        step, generator = generators[index]
        power = 0
        while weight + power * step <= weight_bound:
            extend(index + 1, weight + power * step, exponents + (power,), series)
            power += 1
            series = series * generator

    extend(0, 0, (), QSeries([1], 0, qorder))
    elements = [
        BasisElement(
            name=_monomial_name(generators, exponents),
            weight=weight,
            exponents=exponents,
            series=series,
        )
        for weight, exponents, series in found
    ]
    elements.sort(key=lambda element: (element.weight, element.name))
    return EisensteinBasis(weight_bound=weight_bound, qorder=qorder, elements=elements)


class ModularityService:
    # divisor sums and Eisenstein series

    @staticmethod
    def sigma_series(w: int, qorder: int) -> QSeries:
        """Sigma_w = sum_{n >= 1} sigma_w(n) q^n."""
        _check_order("weight", w)
        return QSeries(
            [0] + [NumberService.divisor_sigma(w, n) for n in range(1, qorder)],
            0,
            max(qorder, 0),
        )

    @staticmethod
    def eisenstein_even(two_g: int, qorder: int) -> QSeries:
        if two_g < 2 or two_g % 2:
            raise ValueError(
                f"even Eisenstein series need an even weight >= 2, got {two_g}"
            )
        factor = -Fraction(2 * two_g) / NumberService.bernoulli(two_g)
        return 1 + ModularityService.sigma_series(two_g - 1, qorder) * factor

    @staticmethod
    def eisenstein_odd_q2(two_g_plus_1: int, qorder: int) -> QSeries:
        """E_{2g+1}(q^2) = 1 + 4 (-1)^g / e_{2g} sum sigma_{2g-1}(n) q^n."""
        if two_g_plus_1 < 3 or two_g_plus_1 % 2 == 0:
            raise ValueError(
                f"odd Eisenstein series need an odd weight >= 3, got {two_g_plus_1}"
            )
        g = (two_g_plus_1 - 1) // 2
        factor = Fraction(4 * (-1) ** g, NumberService.secant_number(2 * g))
        return 1 + ModularityService.sigma_series(2 * g - 1, qorder) * factor

    @staticmethod
    def eisenstein(weight: int, qorder: int) -> QSeries:
        if weight % 2:
            return ModularityService.eisenstein_odd_q2(weight, qorder)
        return ModularityService.eisenstein_even(weight, qorder)

    @staticmethod
    def basis(weight_bound: int, qorder: int) -> EisensteinBasis:
        """All monomials in the generators of total weight <= weight_bound."""
        _check_order("weight bound", weight_bound)
        return _eisenstein_basis(weight_bound, qorder)

    # v-expansions

    @staticmethod
    def b_series(vorder: int) -> VSeries:
        """sum_n (i^n v^n / n!) sum_k (-1)^k B_k B_{n-k} C(n, k)."""
        _check_order("vorder", vorder)
        coeffs = []
        for n in range(vorder):
            total = sum(
                (-1) ** k
                * NumberService.bernoulli(k)
                * NumberService.bernoulli(n - k)
                * NumberService.binomial(n, k)
                for k in range(n + 1)
            )
            coeffs.append(I_UNIT**n * total / factorial(n))
        return VSeries(coeffs, 0, vorder)

    @staticmethod
    def psi_kls(k: int, l: int, s: int, qorder: int) -> QSeries:
        """Coefficient of v^s in log Phi(u^k, u^l e^{iv}; q) over UPoly."""
        _check_order("s", s)
        sign = (-1) ** s
        coeffs: List = [0]
        for big_n in range(1, qorder):
            total = UPoly()
            for r in NumberService.divisors(big_n):
                if s == 0:
                    weight = Fraction(1, r)
                    total = total - 2 * weight
                    signed = (((k + l) * r, 1), (l * r, 1), (k * r, -1))
                else:
                    weight = r ** (s - 1)
                    signed = (((k + l) * r, 1), (l * r, 1))
                for a, coefficient in signed:
                    total = (
                        total
                        + UPoly.from_doubled(2 * a, coefficient * weight)
                        + UPoly.from_doubled(-2 * a, sign * coefficient * weight)
                    )
            if s:
                total = total * (I_UNIT**s / factorial(s))
            coeffs.append(total)
        return QSeries(coeffs, 0, max(qorder, 0))

    @staticmethod
    def psi_kls_derivative(k: int, l: int, s: int, t: int, qorder: int) -> QSeries:
        """t-th u-derivative of psi_kls at u = 1, from binomials C(a r, t)."""
        _check_order("s", s)
        _check_order("t", t)
        binomial = NumberService.binomial
        scale = factorial(t)
        coeffs: List = [0]
        for big_n in range(1, qorder):
            total = 0
            for r in NumberService.divisors(big_n):
                if s == 0:
                    total += Fraction(scale, r) * (
                        binomial((k + l) * r, t)
                        + binomial(-(k + l) * r, t)
                        + binomial(l * r, t)
                        + binomial(-l * r, t)
                        - binomial(k * r, t)
                        - binomial(-k * r, t)
                        - 2 * binomial(0, t)
                    )
                else:
                    sign = (-1) ** s
                    total += scale * r ** (s - 1) * (
                        binomial((k + l) * r, t)
                        + sign * binomial(-(k + l) * r, t)
                        + binomial(l * r, t)
                        + sign * binomial(-l * r, t)
                    )
            coeffs.append(I_UNIT**s * total / factorial(s))
        return QSeries(coeffs, 0, max(qorder, 0))

    @staticmethod
    def log_phi_v(k: int, l: int, qorder: int, vorder: int) -> VSeries:
        """log Phi(u^k, u^l e^{iv}; q) expanded in v."""
        return v_expand(log_series(ThetaService.phi_product(k, l, qorder)), vorder)

    @staticmethod
    def verify_psi_vs_log(k: int, l: int, qorder: int, vorder: int) -> Verdict:
        expansion = ModularityService.log_phi_v(k, l, qorder, vorder)
        for s in range(vorder):
            verdict = compare(
                f"psi closed form k={k} l={l} s={s}",
                expansion.coefficient(s),
                ModularityService.psi_kls(k, l, s, qorder),
            )
            if not verdict.passed:
                return Verdict(
                    identity=verdict.identity,
                    passed=False,
                    location={"v": str(s), **verdict.location},
                    detail=verdict.detail,
                )
        return Verdict(identity=f"psi closed form k={k} l={l}", passed=True)

    @staticmethod
    def verify_psi_derivatives(
        k: int, l: int, qorder: int, vorder: int, tmax: int
    ) -> Verdict:
        expansion = ModularityService.log_phi_v(k, l, qorder, vorder)
        for s in range(vorder):
            column = expansion.coefficient(s)
            for t in range(tmax + 1):
                direct = column.map_coefficients(
                    lambda value: value.derivative_at_one(t) if value else 0
                )
                verdict = compare(
                    f"psi derivative k={k} l={l} s={s} t={t}",
                    direct,
                    ModularityService.psi_kls_derivative(k, l, s, t, qorder),
                )
                if not verdict.passed:
                    return verdict
        return Verdict(identity=f"psi derivatives k={k} l={l}", passed=True)

    @staticmethod
    def euler_g_v(n: int, r: int, qorder: int, vorder: int) -> VSeries:
        """v^2 g^r_n(q, e^{iv}) as a Laurent series in v over q-series."""
        lower = 1 - n
        rows = PartitionService.euler_g(n, r, qorder, max(qorder, 1))
        polynomial_part = QSeries(
            [0]
            + [
                YPoly(rows.coefficient(m).terms) if rows.coefficient(m) else 0
                for m in range(1, qorder)
            ],
            0,
            max(qorder, 0),
        )
        body = v_expand(polynomial_part, max(vorder - 2, 0)).shift(2)
        leading = {e: 0 for e in range(lower, vorder)}
        if r in (0, n):
            sign = 1 if r == 0 else -1
            length = vorder - lower
            beta = _bernoulli_generating(sign, length) ** (n + 1)
            closed = _exp_iv(sign * n, length) * beta * GaussianRational(0, sign) ** (
                n + 1
            )
            for e in range(lower, vorder):
                leading[e] = closed.coefficient(e - lower)
        columns = []
        for e in range(lower, vorder):
            column = [leading[e]] + [
                body.coefficient(e).coefficient(m) if 2 <= e else 0
                for m in range(1, qorder)
            ]
            columns.append(QSeries(column, 0, max(qorder, 0)))
        return VSeries(columns, lower, vorder)

    @staticmethod
    def mpt_check(qorder: int, vorder: int) -> Verdict:
        """-v^2 g^0_1(q, e^{iv}) = exp(sum_g v^{2g} |B_2g| / (g (2g)!) E_2g)."""
        lhs = -ModularityService.euler_g_v(1, 0, qorder, vorder)
        exponent = [QSeries([], 0, qorder) for _ in range(vorder)]
        for two_g in range(2, vorder, 2):
            g = two_g // 2
            scale = abs(NumberService.bernoulli(two_g)) / (g * factorial(two_g))
            exponent[two_g] = ModularityService.eisenstein_even(two_g, qorder) * scale
        rhs = exp_series(VSeries(exponent, 0, vorder))
        return compare("exponential Eisenstein formula for rank one", lhs, rhs)

    @staticmethod
    def logphi_sigma_check(qorder: int, vorder: int) -> Verdict:
        """log Phi(1, e^{iv}; q) = 4 sum_k (-1)^k v^{2k} / (2k)! Sigma_{2k-1}."""
        product = ThetaService.phi_product(0, 0, qorder).map_coefficients(
            lambda row: row.map_coefficients(lambda poly: poly.evaluate_at_one())
            if row
            else 0
        )
        lhs = v_expand(log_series(product), vorder)
        columns = [QSeries([], 0, qorder) for _ in range(vorder)]
        for two_k in range(2, vorder, 2):
            k = two_k // 2
            scale = Fraction(4 * (-1) ** k, factorial(two_k))
            columns[two_k] = ModularityService.sigma_series(two_k - 1, qorder) * scale
        rhs = VSeries(columns, 0, vorder)
        return compare("log product as divisor sums", lhs, rhs)

    # fitting

    @staticmethod
    def fit_in_R(
        target: QSeries, weight_bound: int, fit_qorder: int, test_qorder: int
    ) -> Dict[str, GaussianRational]:
        """Combination of Eisenstein monomials equal to target below test_qorder."""
        if test_qorder <= fit_qorder:
            raise FitWindowError(
                f"test window {test_qorder} must extend the fit window {fit_qorder}"
            )
        basis = ModularityService.basis(weight_bound, test_qorder)
        columns = [element.series for element in basis.elements]
        fit_rows = [[c.coefficient(e) for c in columns] for e in range(fit_qorder)]
        test_rows = [[c.coefficient(e) for c in columns] for e in range(test_qorder)]
        fit_rank = LinearAlgebraService.rank(fit_rows)
        if fit_rank < LinearAlgebraService.rank(test_rows):
            raise FitWindowError(
                f"q^{fit_qorder} does not separate the weight {weight_bound} basis"
            )
        rhs = [target.coefficient(e) for e in range(fit_qorder)]
        solution = LinearAlgebraService.solve(fit_rows, rhs)
        if solution is None:
            raise NoSolutionError(
                f"target is not a combination of weight <= {weight_bound} monomials"
            )
        for e in range(test_qorder):
            value = sum(
                (x * c.coefficient(e) for x, c in zip(solution, columns) if x != 0), 0
            )
            if value != target.coefficient(e):
                raise ValidationFailureError(
                    f"fit through q^{fit_qorder - 1} fails at q^{e}"
                )
        logging.debug("fit of weight %d uses rank %d", weight_bound, fit_rank)
        return {
            element.name: GaussianRational.coerce(x)
            for element, x in zip(basis.elements, solution)
            if x != 0
        }

    @staticmethod
    def fit_coefficient(
        n: int,
        r: int,
        s: int,
        weight_bound: Optional[int] = None,
        ceiling: Optional[int] = None,
        fit_qorder: Optional[int] = None,
        test_qorder: Optional[int] = None,
    ) -> FitReport:
        """Fit the v^s coefficient of v^2 g^r_n(q, e^{iv}), raising the weight bound."""
        ceiling = config.WEIGHT_CEILING if ceiling is None else ceiling
        fit_qorder = config.FIT_QORDER if fit_qorder is None else fit_qorder
        test_qorder = config.TEST_QORDER if test_qorder is None else test_qorder
        bound = min(s + 2 if weight_bound is None else weight_bound, ceiling)
        target = ModularityService.euler_g_v(n, r, test_qorder, s + 1).coefficient(s)
        while True:
            try:
                combination = ModularityService.fit_in_R(
                    target, max(bound, 0), fit_qorder, test_qorder
                )
                break
            except NoSolutionError:
                if bound >= ceiling:
                    raise
                bound += 1
                logging.warning(
                    "raising weight bound to %d for n=%d r=%d s=%d", bound, n, r, s
                )
        return FitReport(
            n=n,
            r=r,
            s=s,
            weight_bound=max(bound, 0),
            combination=[
                CombinationTerm(monomial=name, coeff=str(coefficient))
                for name, coefficient in combination.items()
            ],
            validated_to_qorder=test_qorder,
        )

import logging
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Callable, List

from models.monomial import Monomial
from models.polynomials import TTPoly, UPoly, YPoly
from models.reports import Suite, SuiteReport, Verdict
from models.rings import GaussianRational
from models.series import QSeries, VSeries
from services.modularity import ModularityService
from services.numbers import NumberService
from services.partition import PartitionService
from services.theta import ONE, ThetaService, restrict_window
from services.ucombinatorics import MatrixKind, UCombinatoricsService
from utils.comparison import compare
from utils.errors import (
    FitWindowError,
    IdentityMismatchError,
    NoSolutionError,
    NotDivisibleError,
    ValidationFailureError,
)

_IDENTITY_ERRORS = (
    IdentityMismatchError,
    NotDivisibleError,
    NoSolutionError,
    ValidationFailureError,
    FitWindowError,
)


def _guard(identity: str, check: Callable[[], Verdict]) -> Verdict:
    """Turn a failed exact division or fit into a failed verdict."""
    try:
        return check()
    except _IDENTITY_ERRORS as exc:
        return Verdict(identity=identity, passed=False, detail=str(exc))


def _check(identity: str, condition: bool, **location) -> Verdict:
    return Verdict(
        identity=identity,
        passed=condition,
        location={key: str(value) for key, value in location.items()},
    )


def _located(verdict: Verdict, **location) -> Verdict:
    if verdict.passed:
        return verdict
    return Verdict(
        identity=verdict.identity,
        passed=False,
        location={**{k: str(v) for k, v in location.items()}, **verdict.location},
        detail=verdict.detail,
    )


def _row(series: QSeries, m: int) -> YPoly:
    value = series.coefficient(m)
    return value if isinstance(value, YPoly) else YPoly.constant(value)


def _tail(series: QSeries, start: int) -> QSeries:
    return QSeries(series.coeffs[start - series.lower :], start, series.order)


def _at_u_one(series: QSeries) -> QSeries:
    return series.map_coefficients(
        lambda row: row.map_coefficients(lambda poly: poly.evaluate_at_one())
        if isinstance(row, YPoly)
        else row
    )


class VerificationService:
    # u-combinatorics

    @staticmethod
    def u_combinatorics_checks(cutoff: int, rank_max: int) -> List[Verdict]:
        ucomb = UCombinatoricsService
        small = min(cutoff, 20)
        pairs = [(n, k) for n in range(small + 1) for k in range(n + 1)]
        verdicts = [
            _check(
                "u-binomial Pascal rule",
                all(
                    ucomb.u_binomial(n + 1, k)
                    == ucomb.u_binomial(n, k)
                    + ucomb.u_binomial(n, k - 1).shift(n + 1 - k)
                    for n, k in pairs
                ),
            ),
            _check(
                "u-integer splitting",
                all(
                    ucomb.u_integer(n)
                    == ucomb.u_integer(n - k) + ucomb.u_integer(k).shift(n - k)
                    for n, k in pairs
                ),
            ),
            _check(
                "symmetric u-binomial palindromy",
                all(
                    ucomb.sym_u_binomial(n, k) == ucomb.sym_u_binomial(n, k).invert_u()
                    for n, k in pairs
                ),
            ),
            _check(
                "u-binomial degree and value at 1",
                all(
                    ucomb.u_binomial(n, k).evaluate_at_one() == comb(n, k)
                    and max(ucomb.u_binomial(n, k).exponents()) == k * (n - k)
                    for n, k in pairs
                ),
            ),
            VerificationService.k_series_check(min(cutoff, 10)),
            VerificationService.sym_binomial_recursion_check(min(cutoff, 12)),
            VerificationService.matrix_product_check(0, cutoff),
        ]
        for n in range(1, rank_max + 1):
            verdicts.append(
                VerificationService.matrix_product_check(n, min(cutoff, 31))
            )
        return verdicts

    @staticmethod
    def k_series_check(nmax: int) -> Verdict:
        """K_n coefficients are symmetric binomials; K_n(1/t) = t^-n K_n(t)."""
        ucomb = UCombinatoricsService
        for n in range(-nmax, nmax + 1):
            series = ucomb.k_series(n, nmax)
            for k in range(nmax + 1):
                if series.coefficient(k) != ucomb.sym_u_binomial(n, k):
                    return _check("K_n generating function", False, n=n, t=k)
            if n > 0 and any(
                series.coefficient(k) != series.coefficient(n - k) for k in range(n + 1)
            ):
                return _check("K_n reflection", False, n=n)
        return _check("K_n generating function", True)

    @staticmethod
    def sym_binomial_recursion_check(nmax: int) -> Verdict:
        """{n+k, k} = sum_s u^((sn+s-k)/2) {n+k-s-1, k-s}."""
        sym = UCombinatoricsService.sym_u_binomial
        for n in range(nmax + 1):
            for k in range(nmax + 1):
                total = UPoly()
                for s in range(k + 1):
                    exponent = Fraction(s * n + s - k, 2)
                    total = total + sym(n + k - s - 1, k - s).shift(exponent)
                if total != sym(n + k, k):
                    return _check("symmetric binomial recursion", False, n=n, k=k)
        return _check("symmetric binomial recursion", True)

    @staticmethod
    def matrix_product_check(n: int, cutoff: int) -> Verdict:
        """A(0) B = 1 for n = 0, A(n) B = P(n) otherwise, on indices below cutoff."""
        name = "A(0) B = 1" if n == 0 else f"A({n}) B = P({n})"
        for i in range(cutoff):
            for j in range(i, cutoff, 2):
                product = UCombinatoricsService.matrix_product_entry(
                    MatrixKind.A, MatrixKind.B, n, i, j
                )
                if n == 0:
                    expected = UPoly.constant(1) if i == j else UPoly()
                else:
                    expected = UCombinatoricsService.matrix_entry(MatrixKind.P, n, i, j)
                verdict = _located(compare(name, product, expected), i=i, j=j)
                if not verdict.passed:
                    return verdict
        return Verdict(identity=name, passed=True)

    # theta kernels

    @staticmethod
    def psi_phi_check(x: Monomial, y: Monomial, qorder: int, ywin: int) -> Verdict:
        """Psi(x, y) = Phi(xy, 1/y); q^0 rows are compared times (1 - xy)(1 - 1/y)."""
        identity = f"Psi({x}, {y}) = Phi({x * y}, {y.inverse()})"
        psi = ThetaService.psi(x, y, qorder, ywin)
        phi = ThetaService.phi_bilateral(x * y, y.inverse(), qorder, ywin)
        if qorder <= 0:
            return Verdict(identity=identity, passed=True)
        clearing = (ONE - (x * y).to_ypoly()) * (ONE - y.inverse().to_ypoly())
        verdict = _located(
            compare(identity, _row(psi, 0) * clearing, _row(phi, 0) * clearing), q=0
        )
        if not verdict.passed:
            return verdict
        return compare(identity, _tail(psi, 1), _tail(phi, 1))

    @staticmethod
    def theta_quotient_check(qorder: int, ywin: int) -> Verdict:
        """Phi(a, b) Theta(a) Theta(b) = (q; q)^3 Theta(ab) at a = u y, b = 1/y."""
        a, b = Monomial(2, 1), Monomial(0, -1)
        # each exact theta factor eats at most qorder + 1 powers of y
        phi = ThetaService.phi_bilateral(a, b, qorder, ywin + 2 * qorder + 2)
        lhs = phi * ThetaService.theta(a, qorder) * ThetaService.theta(b, qorder)
        euler = ThetaService.pochhammer(Monomial(), 1, qorder)
        rhs = euler**3 * ThetaService.theta(a * b, qorder)
        return compare("theta quotient", lhs, restrict_window(rhs, ywin))

    @staticmethod
    def theta_root_check(qorder: int) -> Verdict:
        """Theta(y; q) vanishes at y = 1 in every q-degree."""
        theta = ThetaService.theta(Monomial(0, 1), qorder)
        for m, row in theta.items():
            if not isinstance(row, YPoly):
                continue
            value = sum((poly.evaluate_at_one() for _, poly in row.items()), 0)
            if value != 0:
                return _check("Theta(1) = 0", False, q=m)
        return _check("Theta(1) = 0", True)

    @staticmethod
    def bridge_check(k: int, l: int, qorder: int, ywin: int) -> Verdict:
        """(1 - xy)(1 - 1/y) Psi(x, y) = (1 - x) Phi(x, y) at x = u^k, y -> u^l y."""
        x, y = Monomial(2 * k, 0), Monomial(2 * l, 1)
        clearing = (ONE - (x * y).to_ypoly()) * (ONE - y.inverse().to_ypoly())
        lhs = ThetaService.psi(x, y, qorder, ywin + 1) * clearing
        rhs = ThetaService.phi_product(k, l, qorder) * (ONE - x.to_ypoly())
        return compare(f"rank-one bridge k={k} l={l}", lhs, restrict_window(rhs, ywin))

    @staticmethod
    def theta_checks(qorder: int, ywin: int) -> List[Verdict]:
        pairs = [
            (Monomial(2, 0), Monomial(0, 1)),
            (Monomial(2, 0), Monomial(1, 1)),
            (Monomial(4, 1), Monomial(-2, 1)),
            (Monomial(3, 0), Monomial(2, 2)),
        ]
        verdicts = [
            VerificationService.psi_phi_check(x, y, qorder, ywin) for x, y in pairs
        ]
        verdicts.append(VerificationService.theta_quotient_check(qorder, ywin))
        verdicts.append(VerificationService.theta_root_check(qorder))
        for k in (1, 2):
            for l in (-1, 0, 1):
                verdicts.append(VerificationService.bridge_check(k, l, qorder, ywin))
        return verdicts

    # partition functions

    @staticmethod
    def route_check(n: int, r: int, qorder: int, ywin: int) -> Verdict:
        """Closed form, matrix route, theta route and u = 1 specialization agree."""
        closed = PartitionService.g_closed(n, r, qorder, ywin).series
        matrices = PartitionService.g_via_matrices(n, r, qorder, ywin).series
        verdict = compare(f"closed = matrices n={n} r={r}", closed, matrices)
        if not verdict.passed:
            return verdict
        identity = f"closed = theta route n={n} r={r}"
        modus = PartitionService.g_via_modus(n, r, qorder, ywin).series
        if r == n and qorder > 0:
            head_closed, head_modus = closed, modus
            # clearing costs n + 1 powers of y; keep |y| <= n + 1 after it
            wide = 2 * n + 2
            if ywin < wide:
                logging.debug("y-window raised to %d for the q^0 row", wide)
                head_closed = PartitionService.g_closed(n, r, 1, wide).series
                head_modus = PartitionService.g_via_modus(n, r, 1, wide).series
            clearing = PartitionService.modus_q0_denominator(n)
            verdict = _located(
                compare(
                    identity,
                    _row(head_closed, 0) * clearing,
                    _row(head_modus, 0) * clearing,
                ),
                q=0,
            )
            if not verdict.passed:
                return verdict
            verdict = compare(identity, _tail(closed, 1), _tail(modus, 1))
        else:
            verdict = compare(identity, closed, modus)
        if not verdict.passed:
            return verdict
        return compare(
            f"closed form at u = 1 n={n} r={r}",
            _at_u_one(closed),
            PartitionService.euler_g(n, r, qorder, ywin),
        )

    @staticmethod
    def route_checks(nmax: int, qorder: int, ywin: int) -> List[Verdict]:
        return [
            _guard(
                f"routes n={n} r={r}",
                lambda n=n, r=r: VerificationService.route_check(n, r, qorder, ywin),
            )
            for n in range(1, nmax + 1)
            for r in range(0, n + 1)
        ]

    @staticmethod
    def duality_check(n: int, r: int, qorder: int, ywin: int) -> Verdict:
        """G^r_n(q, y) = G^(n-r)_n(q, 1/y)."""
        lhs = PartitionService.g_closed(n, r, qorder, ywin).series
        rhs = PartitionService.g_closed(n, n - r, qorder, ywin).series
        dual = rhs.map_coefficients(YPoly.invert_y)
        return compare(f"duality n={n} r={r}", lhs, dual)

    @staticmethod
    def duality_checks(nmax: int, qorder: int, ywin: int) -> List[Verdict]:
        verdicts = [
            VerificationService.duality_check(n, r, qorder, ywin)
            for n in range(1, nmax + 1)
            for r in range(0, n + 1)
        ]
        for n in (1, 2):
            for r in range(0, n + 1):
                for g in range(0, 4):
                    verdicts.append(
                        compare(
                            f"Syst duality n={n} r={r} g={g}",
                            PartitionService.syst_hodge(n, r, g, 0),
                            PartitionService.syst_hodge(n, n - r, g, 0),
                        )
                    )
        return verdicts

    @staticmethod
    def rank_one_checks(qorder: int, ywin: int) -> List[Verdict]:
        verdict, _, _ = PartitionService.ky_product(qorder, ywin)
        verdicts = [verdict]
        order = min(qorder, 3)
        verdicts.append(
            compare(
                "eta^-24 coefficients",
                PartitionService.euler_s_series(order),
                QSeries([1, 24, 324, 3200], -1, order),
            )
        )
        # (1 - y)(1 - 1/y) g^0_1 = -Phi(1, y)
        g = PartitionService.euler_g(1, 0, qorder, ywin + 2)
        clearing = YPoly({-1: -1, 0: 2, 1: -1})
        product = _at_u_one(ThetaService.phi_product(0, 0, qorder))
        verdicts.append(
            compare(
                "rank-one Euler product",
                g * clearing,
                -restrict_window(product, ywin + 1),
            )
        )
        return verdicts

    @staticmethod
    def geometry_checks(qorder: int, ywin: int) -> List[Verdict]:
        syst = PartitionService.syst_hodge
        verdicts = VerificationService.rank_one_checks(qorder, ywin)
        f = PartitionService.f_via_matrices(1, 0, 3, 2).series
        verdicts.append(
            _check(
                "Syst^1(0, D_0, 1) is a point",
                f.coefficient(-1).coefficient(1) == 1 and syst(1, 0, 0, 1) == 1,
            )
        )
        verdicts.append(
            _check(
                "Syst^1(0, D_1, 1) has Euler characteristic 24",
                f.coefficient(0).coefficient(1).evaluate_at_one() == 24
                and syst(1, 0, 1, 1).evaluate_at_one() == 24,
            )
        )
        verdicts.append(VerificationService.hodge_positivity_check(2, 6, 4))
        verdicts.append(VerificationService.strata_check(2, 4))
        for n in (1, 2):
            for r in range(0, n + 1):
                verdicts.append(PartitionService.table_consistency(n, r, 3, 3))
        return verdicts

    @staticmethod
    def hodge_positivity_check(nmax: int, gmax: int, kmax: int) -> Verdict:
        """Every nonzero Syst^n Hodge polynomial is nonnegative and palindromic."""
        identity = "Hodge symmetry and positivity"
        for n in range(1, nmax + 1):
            for r in range(0, n + 1):
                for g in range(gmax + 1):
                    for k in range(-kmax, kmax + 1):
                        poly = PartitionService.syst_hodge(n, r, g, k)
                        if poly and PartitionService.hodge_twist(poly) is None:
                            return _check(identity, False, n=n, r=r, g=g, k=k)
        return _check(identity, True)

    @staticmethod
    def strata_check(nmax: int, gmax: int) -> Verdict:
        """Strata resum to M(ell, D_g, k + ell) and to Syst^n(ell, D_g, k + ell)."""
        for g in range(gmax + 1):
            for ell in range(0, 3):
                for k in range(0, 4):
                    strata = PartitionService.strata_range(ell, k, g)
                    if not strata:
                        continue
                    total = sum(
                        (PartitionService.stratum_hodge(ell, k, g, s) for s in strata),
                        TTPoly(),
                    )
                    expected = PartitionService.hilb_hodge(g - ell * ell - ell * k)
                    if total != expected:
                        return _check("strata sum", False, l=ell, k=k, g=g)
                    for n in range(max(ell, 1), nmax + 1):
                        systems = sum(
                            (
                                PartitionService.syst_stratum_hodge(n, ell, k, g, s)
                                for s in strata
                            ),
                            TTPoly(),
                        )
                        if systems != PartitionService.syst_hodge(n, ell, g, k):
                            return _check(
                                "Syst strata sum", False, n=n, l=ell, k=k, g=g
                            )
        return _check("strata sum", True)

    # modularity

    @staticmethod
    def sigma_multiplicativity_check(nmax: int) -> Verdict:
        sigma = NumberService.divisor_sigma
        for w in range(0, 4):
            for m in range(1, nmax + 1):
                for n in range(1, nmax // m + 1):
                    if gcd(m, n) == 1 and sigma(w, m * n) != sigma(w, m) * sigma(w, n):
                        return _check("sigma multiplicativity", False, w=w, m=m, n=n)
        return _check("sigma multiplicativity", True)

    @staticmethod
    def b_series_check(vorder: int) -> Verdict:
        """B is even and B (e^{iv} - 1)(e^{-iv} - 1) / v^2 = 1."""
        b = ModularityService.b_series(vorder)
        for s in range(1, vorder, 2):
            if b.coefficient(s) != 0:
                return _check("B is even", False, v=s)
        # (2 - 2 cos v) / v^2 = sum_j 2 (-1)^j v^(2j) / (2j + 2)!
        factor = [
            Fraction(2 * (-1) ** (s // 2), factorial(s + 2)) if s % 2 == 0 else 0
            for s in range(vorder)
        ]
        return compare(
            "B times (2 - 2 cos v) / v^2",
            b * VSeries(factor, 0, vorder),
            VSeries([1], 0, vorder),
        )

    @staticmethod
    def parity_check(n: int, r: int, qorder: int, vorder: int) -> Verdict:
        """Even v-powers are real, odd ones imaginary, and r -> n - r flips v."""
        expansion = ModularityService.euler_g_v(n, r, qorder, vorder)
        dual = ModularityService.euler_g_v(n, n - r, qorder, vorder)
        identity = f"v-parity n={n} r={r}"
        for s in range(expansion.lower, vorder):
            column = expansion.coefficient(s)
            for m, value in column.items():
                value = GaussianRational.coerce(value)
                if not value:
                    continue
                if not (value.is_imaginary() if s % 2 else value.is_real()):
                    return _check(identity, False, v=s, q=m)
                if 2 * r == n and s % 2:
                    return _check(f"odd v-powers vanish n={n} r={r}", False, v=s, q=m)
            sign = -1 if s % 2 else 1
            verdict = _located(
                compare(f"v-duality n={n} r={r}", column, dual.coefficient(s) * sign),
                v=s,
            )
            if not verdict.passed:
                return verdict
        return _check(identity, True)

    @staticmethod
    def fit_checks(smax: int) -> List[Verdict]:
        verdicts = []
        for r in (0, 1, 2):
            for s in range(0, smax + 1):
                identity = f"Eisenstein fit n=2 r={r} s={s}"
                verdicts.append(
                    _guard(
                        identity,
                        lambda r=r, s=s, name=identity: _fit_verdict(name, r, s),
                    )
                )
        return verdicts

    @staticmethod
    def modularity_checks(qorder: int, vorder: int, fits: bool = True) -> List[Verdict]:
        verdicts = [
            VerificationService.sigma_multiplicativity_check(50),
            VerificationService.b_series_check(max(vorder, 12)),
        ]
        for k in range(3):
            for l in range(3):
                verdicts.append(
                    ModularityService.verify_psi_vs_log(k, l, qorder, min(vorder, 7))
                )
                verdicts.append(
                    ModularityService.verify_psi_derivatives(
                        k, l, qorder, min(vorder, 7), 3
                    )
                )
        verdicts.append(ModularityService.mpt_check(qorder + 2, vorder + 2))
        verdicts.append(ModularityService.logphi_sigma_check(qorder + 5, vorder + 4))
        for n in range(1, 4):
            for r in range(0, n + 1):
                verdicts.append(VerificationService.parity_check(n, r, qorder, vorder))
        if fits:
            verdicts.extend(VerificationService.fit_checks(6))
        return verdicts

    # suites

    @staticmethod
    def run_suite(
        suite: Suite,
        qorder: int,
        ywin: int,
        vorder: int,
        cutoff: int,
        rank_max: int,
        nmax: int = 3,
    ) -> SuiteReport:
        suite = Suite(suite)
        if suite == Suite.ALL:
            verdicts: List[Verdict] = []
            for part in Suite:
                if part != Suite.ALL:
                    verdicts.extend(
                        VerificationService.run_suite(
                            part, qorder, ywin, vorder, cutoff, rank_max, nmax
                        ).verdicts
                    )
            return _report(suite, verdicts)
        logging.info(
            "suite %s: qorder=%d ywin=%d vorder=%d", suite.value, qorder, ywin, vorder
        )
        if suite == Suite.UCOMB:
            verdicts = VerificationService.u_combinatorics_checks(cutoff, rank_max)
        elif suite == Suite.THETA:
            verdicts = VerificationService.theta_checks(qorder, ywin)
        elif suite == Suite.ROUTES:
            verdicts = VerificationService.route_checks(nmax, qorder, ywin)
        elif suite == Suite.DUALITY:
            verdicts = VerificationService.duality_checks(nmax + 1, qorder, ywin)
        elif suite == Suite.GEOMETRY:
            verdicts = VerificationService.geometry_checks(qorder, ywin)
        else:
            verdicts = VerificationService.modularity_checks(qorder, vorder)
        return _report(suite, verdicts)


def _fit_verdict(identity: str, r: int, s: int) -> Verdict:
    report = ModularityService.fit_coefficient(2, r, s)
    terms = (f"({term.coeff})*{term.monomial}" for term in report.combination)
    return Verdict(identity=identity, passed=True, detail=" + ".join(terms))


def _report(suite: Suite, verdicts: List[Verdict]) -> SuiteReport:
    report = SuiteReport(
        suite=suite.value,
        passed=all(verdict.passed for verdict in verdicts),
        verdicts=verdicts,
    )
    failure = report.first_failure
    if failure is not None:
        logging.warning(
            "suite %s fails: %s at %s", suite.value, failure.identity, failure.location
        )
    return report

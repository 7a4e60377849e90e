from fractions import Fraction
from typing import Dict

import pytest

from models.reports import FitReport
from models.rings import GaussianRational
from models.series import QSeries
from services.modularity import ModularityService
from utils.errors import FitWindowError, NoSolutionError


class TestModularityService:
    class TestEisenstein:
        def test_sigma_series(self):
            assert ModularityService.sigma_series(1, 5) == QSeries([0, 1, 3, 4, 7])

        def test_weight_two(self):
            assert ModularityService.eisenstein(2, 5) == QSeries(
                [1, -24, -72, -96, -168]
            )

        def test_weight_four(self):
            assert ModularityService.eisenstein(4, 3) == QSeries([1, 240, 2160])

        def test_odd_weight_in_q_squared(self):
            assert ModularityService.eisenstein(3, 4) == QSeries([1, -4, -12, -16])

        def test_bad_weights(self):
            with pytest.raises(ValueError):
                ModularityService.eisenstein_even(3, 4)
            with pytest.raises(ValueError):
                ModularityService.eisenstein_odd_q2(1, 4)

    class TestBasis:
        def test_names_sorted_by_weight(self):
            basis = ModularityService.basis(4, 3)
            assert basis.names() == ["1", "E2", "E3q2", "E2^2", "E4"]

        def test_weights(self):
            basis = ModularityService.basis(5, 3)
            weights = [element.weight for element in basis.elements]
            assert weights == sorted(weights)
            assert max(weights) == 5

    class TestVExpansions:
        def test_b_series(self):
            b = ModularityService.b_series(3)
            assert b.coefficient(0) == 1
            assert b.coefficient(1) == 0
            assert b.coefficient(2) == Fraction(1, 12)

        def test_psi_at_u_one(self):
            second = ModularityService.psi_kls(1, 0, 2, 3)
            assert second.coefficient(1).evaluate_at_one() == -2
            assert second.coefficient(2).evaluate_at_one() == -6
            zeroth = ModularityService.psi_kls(1, 0, 0, 3)
            assert zeroth.coefficient(1).evaluate_at_one() == 0

        def test_psi_matches_logarithm(self):
            assert ModularityService.verify_psi_vs_log(1, 0, 5, 4).passed
            assert ModularityService.verify_psi_vs_log(2, 1, 4, 4).passed

        def test_psi_derivatives(self):
            assert ModularityService.verify_psi_derivatives(1, 1, 4, 3, 2).passed

        def test_rank_one_exponential_formula(self):
            assert ModularityService.mpt_check(6, 6).passed

        def test_log_product_divisor_sums(self):
            assert ModularityService.logphi_sigma_check(6, 6).passed

    class TestFit:
        def test_recovers_a_monomial(self):
            target = ModularityService.eisenstein(2, 14) ** 2
            assert ModularityService.fit_in_R(target, 4, 10, 14) == {"E2^2": 1}

        def test_window_must_grow(self):
            with pytest.raises(FitWindowError):
                ModularityService.fit_in_R(QSeries([1], 0, 8), 2, 8, 8)

        def test_outside_the_span(self):
            with pytest.raises(NoSolutionError):
                ModularityService.fit_in_R(QSeries([0, 1], 0, 8), 2, 6, 8)

        def test_constant_coefficient(self):
            report = ModularityService.fit_coefficient(
                1, 0, 0, ceiling=0, fit_qorder=8, test_qorder=10
            )
            assert report.weight_bound == 0
            assert [term.monomial for term in report.combination] == ["1"]
            assert report.validated_to_qorder == 10

        def test_ceiling_stops_the_search(self):
            with pytest.raises(NoSolutionError):
                ModularityService.fit_coefficient(
                    1, 0, 2, ceiling=0, fit_qorder=8, test_qorder=10
                )

    class TestRankTwoFits:
        def test_stored_combination(self, rank_two_fit_fixture: FitReport):
            assert ModularityService.fit_coefficient(2, 1, 2) == rank_two_fit_fixture

        @pytest.mark.parametrize("r", [0, 1, 2])
        @pytest.mark.parametrize("s", [2, 4])
        def test_even_powers_are_real(self, r: int, s: int):
            report = ModularityService.fit_coefficient(2, r, s)

            assert report.weight_bound == s + 2
            assert report.validated_to_qorder == 31
            assert report.combination
            assert all(
                GaussianRational.parse(term.coeff).is_real()
                for term in report.combination
            )

        @pytest.mark.parametrize("s", [1, 3, 5])
        def test_odd_powers_vanish_in_the_middle(self, s: int):
            assert ModularityService.fit_coefficient(2, 1, s).combination == []

        @pytest.mark.parametrize("s", [1, 3])
        def test_odd_powers_are_imaginary_and_dual(self, s: int):
            low = _coefficients(ModularityService.fit_coefficient(2, 0, s))
            high = _coefficients(ModularityService.fit_coefficient(2, 2, s))

            assert all(value.is_imaginary() for value in low.values())
            assert high == {name: -value for name, value in low.items()}


def _coefficients(report: FitReport) -> Dict[str, GaussianRational]:
    return {
        term.monomial: GaussianRational.parse(term.coeff)
        for term in report.combination
    }

import pytest

from models.monomial import Monomial
from models.polynomials import UPoly, YPoly
from models.series import QSeries
from services.theta import ThetaService
from utils.errors import TruncationError

Y = Monomial(0, 1)
U = Monomial(2, 0)


class TestThetaService:
    class TestPochhammer:
        def test_euler_function(self):
            assert ThetaService.pochhammer(Monomial(), 1, 4) == QSeries(
                [1, -1, -1, 0], 0, 4
            )

        def test_with_constant_factor(self):
            series = ThetaService.pochhammer(Y, 0, 2)
            assert series.coefficient(0) == YPoly({0: 1, 1: -1})
            assert series.coefficient(1) == YPoly({1: -1, 2: 1})

    class TestTheta:
        def test_leading_rows(self):
            theta = ThetaService.theta(Y, 2)
            assert theta.coefficient(0) == YPoly({0: 1, 1: -1})
            assert theta.coefficient(1) == YPoly({2: 1, -1: -1})

        def test_window(self):
            theta = ThetaService.theta(Y, 3, ywin=1)
            assert theta.coefficient(1).window == 1

    class TestBilateral:
        def test_cancellation_on_the_diagonal(self):
            series = ThetaService.phi_bilateral(Y, Y.inverse(), 3, 2)
            assert series.coefficient(1) == 0
            assert series.coefficient(0) == YPoly({-2: 1, -1: 1, 0: 1, 1: 1, 2: 1})

        def test_u_only_argument_needs_u_window(self):
            with pytest.raises(TruncationError):
                ThetaService.phi_bilateral(U, Y, 2, 2)

    class TestPsi:
        def test_trivial_argument(self):
            assert ThetaService.psi(Monomial(), Y, 3, 2) == 0

        def test_first_row(self):
            series = ThetaService.psi(U, Y, 2, 2)
            assert series.coefficient(1) == YPoly({0: UPoly({2: 1, -2: -1})})

        def test_leading_row(self):
            series = ThetaService.psi(U, Y, 1, 2)
            assert series.coefficient(0) == YPoly(
                {1: UPoly({2: 1, 0: -1}), 2: UPoly({4: 1, 0: -1})}
            )

    class TestProduct:
        def test_constant_term(self):
            assert ThetaService.phi_product(1, 0, 3).coefficient(0) == 1

        def test_first_row_at_trivial_u(self):
            # (1 - q)^4 / ((1 - yq)(1 - q/y))^2 at order q
            row = ThetaService.phi_product(0, 0, 2).coefficient(1)
            assert row == YPoly({-1: 2, 0: -4, 1: 2})

import random
from fractions import Fraction

import pytest

from models.polynomials import YPoly
from models.rings import GaussianRational
from models.series import QSeries, exp_series, log_series, substitute_y_exp_iv
from utils.errors import BadConstantTermError, NonUnitLeadingError, TruncationError


class TestQSeries:
    class TestMultiply:
        def test_product(self):
            product = QSeries([1, 1], 0, 3) * QSeries([1, -1], 0, 3)
            assert product == QSeries([1, 0, -1], 0, 3)

        def test_negative_lower(self):
            product = QSeries([1], -1, 3) * QSeries([0, 1], 0, 3)
            assert product.lower == -1
            assert product.coefficient(0) == 1

        def test_order_is_the_exact_range(self):
            product = QSeries([1, 1], 0, 3) * QSeries([1], 0, 5)
            assert product.order == 3

    class TestInvert:
        def test_geometric_series(self):
            assert QSeries([1, -1], 0, 5).invert() == QSeries([1, 1, 1, 1, 1], 0, 5)

        def test_laurent_inverse(self):
            inverse = QSeries([1, 1], -1, 3).invert()
            assert inverse.lower == 1
            assert inverse.order == 5
            assert list(inverse.coeffs) == [1, -1, 1, -1]

        def test_euler_function(self, euler_function_fixture: QSeries):
            product = euler_function_fixture * euler_function_fixture.invert()
            assert product == QSeries([1], 0, 8)

        def test_non_unit_leading(self):
            with pytest.raises(NonUnitLeadingError):
                QSeries([2, 1], 0, 3).invert()

        def test_seeded_round_trips(self):
            rng = random.Random(2024)
            for _ in range(50):
                series = _random_series(rng)
                inverse = series.invert()
                assert series * inverse == QSeries([1], 0, series.order - series.lower)
                assert inverse.invert() == series

    class TestDivide:
        def test_divide(self, euler_function_fixture: QSeries):
            quotient = euler_function_fixture.divide(euler_function_fixture)
            assert quotient == QSeries([1], 0, 8)

    class TestTruncationOrder:
        def test_lower_order_is_a_prefix(self, euler_function_fixture: QSeries):
            rng = random.Random(11)
            other = _random_series(rng, lower=0, length=8)
            high = (euler_function_fixture * other).invert()
            low = (euler_function_fixture.truncate(5) * other.truncate(5)).invert()

            assert low.order == 5
            assert high.order == 8
            assert low == high
            assert all(low.coefficient(e) == high.coefficient(e) for e in range(5))

        def test_log_exp_respect_truncation(self, euler_function_fixture: QSeries):
            high = log_series(euler_function_fixture)
            low = log_series(euler_function_fixture.truncate(4))
            assert low.order == 4
            assert all(low.coefficient(e) == high.coefficient(e) for e in range(4))

    class TestCoefficient:
        def test_below_lower_is_zero(self):
            assert QSeries([1, 2], 0, 2).coefficient(-3) == 0

        def test_beyond_order_is_unknown(self):
            with pytest.raises(TruncationError):
                QSeries([1, 2], 0, 2).coefficient(2)

    class TestToDict:
        def test_canonical_keys(self):
            document = QSeries([1, Fraction(-1, 2)], -1, 1).to_dict()
            assert document == {
                "var": "q",
                "lower": -1,
                "order": 1,
                "coeffs": ["1", "-1/2"],
            }


class TestLogExp:
    def test_mercator(self):
        assert log_series(QSeries([1, -1], 0, 4)) == QSeries(
            [0, -1, Fraction(-1, 2), Fraction(-1, 3)], 0, 4
        )

    def test_exp(self):
        assert exp_series(QSeries([0, 1], 0, 4)) == QSeries(
            [1, 1, Fraction(1, 2), Fraction(1, 6)], 0, 4
        )

    def test_log_needs_constant_one(self):
        with pytest.raises(BadConstantTermError):
            log_series(QSeries([2, 1], 0, 3))

    def test_exp_needs_constant_zero(self):
        with pytest.raises(BadConstantTermError):
            exp_series(QSeries([1, 1], 0, 3))

    def test_exp_inverts_log(self, euler_function_fixture: QSeries):
        assert exp_series(log_series(euler_function_fixture)) == euler_function_fixture


class TestSubstituteYExpIV:
    def test_cosine(self):
        expansion = substitute_y_exp_iv(YPoly({1: 1, -1: 1}), 5)
        assert [expansion.coefficient(s) for s in range(5)] == [
            2,
            0,
            -1,
            0,
            Fraction(1, 12),
        ]

    def test_sine(self):
        expansion = substitute_y_exp_iv(YPoly({1: 1, -1: -1}), 4)
        assert expansion.coefficient(1) == GaussianRational(0, 2)
        assert expansion.coefficient(3) == GaussianRational(0, Fraction(-1, 3))

    def test_constant(self):
        expansion = substitute_y_exp_iv(YPoly({0: 1}), 3)
        assert [expansion.coefficient(s) for s in range(3)] == [1, 0, 0]

    def test_needs_exact_polynomial(self):
        with pytest.raises(TruncationError):
            substitute_y_exp_iv(YPoly({0: 1}, window=3), 3)


def _random_series(rng: random.Random, lower=None, length: int = 8) -> QSeries:
    lower = rng.randint(-2, 2) if lower is None else lower
    leading = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 5))
    rest = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(length - 1)]
    return QSeries([leading] + rest, lower, lower + length)

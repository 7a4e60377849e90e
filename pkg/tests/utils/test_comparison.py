from models.polynomials import UPoly, YPoly
from models.reports import SuiteReport
from models.series import QSeries
from utils.comparison import compare, first_difference


class TestCompare:
    def test_equal(self):
        verdict = compare("same", QSeries([1, 2]), QSeries([1, 2]))
        assert verdict.passed
        assert verdict.location == {}

    def test_series_difference(self):
        verdict = compare("q", QSeries([1, 2]), QSeries([1, 3]))
        assert not verdict.passed
        assert verdict.location == {"q": "1"}
        assert verdict.detail == "2 != 3"

    def test_nested_difference(self):
        lhs = QSeries([YPoly({0: UPoly.constant(1), 1: UPoly.constant(2)})])
        rhs = QSeries([YPoly({0: UPoly.constant(1), 1: UPoly({0: 2, 2: 1})})])
        assert first_difference(lhs, rhs)[0] == {"q": "0", "y": "1", "u": "1"}

    def test_scalar_against_polynomial(self):
        assert first_difference(UPoly.constant(3), 3) is None
        assert first_difference(UPoly.constant(3), 4)[0] == {"u": "0"}

    def test_window_hides_unknown_terms(self):
        assert first_difference(YPoly({0: 1}, window=1), YPoly({0: 1, 4: 2})) is None


class TestSuiteReport:
    def test_first_failure(self, suite_report_fixture: SuiteReport):
        failure = suite_report_fixture.first_failure
        assert failure.identity == "rank-one bridge k=1 l=0"
        assert failure.location == {"q": "2", "y": "-1", "u": "1"}

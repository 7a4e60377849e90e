import pytest

from models.reports import CombinationTerm, FitReport


@pytest.fixture()
def rank_two_fit_fixture() -> FitReport:
    # v^2 coefficient of v^2 g^1_2 is sum n sigma_1(n) q^n = (E4 - E2^2) / 288
    return FitReport(
        n=2,
        r=1,
        s=2,
        weight_bound=4,
        combination=[
            CombinationTerm(monomial="E2^2", coeff="-1/288+0i"),
            CombinationTerm(monomial="E4", coeff="1/288+0i"),
        ],
        validated_to_qorder=31,
    )

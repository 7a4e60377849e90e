from unittest.mock import patch

import pytest

from models.mukai import MukaiVector
from models.partition import Route
from models.polynomials import TTPoly, UPoly
from models.series import QSeries
from services.partition import PartitionService
from utils.errors import (
    IdentityMismatchError,
    NegativeDimensionError,
    UnsupportedRankError,
)


class TestPartitionService:
    class TestMukaiLattice:
        def test_pairing(self, structure_sheaf_fixture: MukaiVector):
            point = MukaiVector(r=0, genus=0, a=1, d=0)
            curve = MukaiVector(r=0, genus=2, a=1)
            assert (
                PartitionService.mukai_pairing(
                    structure_sheaf_fixture, structure_sheaf_fixture
                )
                == -2
            )
            assert PartitionService.mukai_pairing(curve, curve) == 2
            assert PartitionService.mukai_pairing(structure_sheaf_fixture, point) == -1

        def test_pairing_needs_one_genus(self):
            with pytest.raises(ValueError):
                PartitionService.mukai_pairing(
                    MukaiVector(r=0, genus=1, a=0), MukaiVector(r=0, genus=2, a=0)
                )

        def test_moduli_dimension(self, structure_sheaf_fixture: MukaiVector):
            assert PartitionService.moduli_dim(structure_sheaf_fixture) == 0
            assert PartitionService.moduli_dim(MukaiVector(r=0, genus=5, a=3)) == 10
            assert PartitionService.moduli_dim(MukaiVector(r=1, genus=3, a=0)) == 6

        def test_negative_dimension(self):
            with pytest.raises(NegativeDimensionError) as exc:
                PartitionService.moduli_dim(MukaiVector(r=2, genus=0, a=2, d=0))
            assert exc.value.dimension == -6

        def test_dimension_is_twice_g_minus_ra(self):
            assert PartitionService.moduli_dim(MukaiVector(r=1, genus=5, a=2)) == 6
            assert PartitionService.moduli_dim(MukaiVector(r=0, genus=4, a=-7)) == 8
            with pytest.raises(NegativeDimensionError):
                PartitionService.moduli_dim(MukaiVector(r=1, genus=0, a=1))

        @patch("services.partition.PartitionService.mukai_pairing", return_value=0)
        def test_inconsistent_pairing(self, _):
            with pytest.raises(IdentityMismatchError) as exc:
                PartitionService.moduli_dim(MukaiVector(r=1, genus=5, a=2))
            assert exc.value.location["found"] == "2"

    class TestHilbertSchemes:
        def test_point(self):
            assert PartitionService.hilb_hodge(0) == 1
            assert PartitionService.hilb_hodge(-1) == 0

        def test_surface(self):
            assert PartitionService.hilb_hodge(1) == TTPoly(
                {(0, 0): 1, (2, 0): 1, (1, 1): 20, (0, 2): 1, (2, 2): 1}
            )

        def test_euler_characteristics(self):
            assert PartitionService.hilb_hodge(2).evaluate_at_one() == 324
            assert PartitionService.euler_s_series(3) == QSeries(
                [1, 24, 324, 3200], -1, 3
            )

        def test_hodge_symmetry(self):
            assert PartitionService.hodge_twist(PartitionService.hilb_hodge(1)) == 2
            assert PartitionService.hodge_twist(PartitionService.hilb_hodge(2)) == 4

        def test_twist_rejects_negative_numbers(self):
            assert PartitionService.hodge_twist(TTPoly({(0, 0): -1})) is None
            assert PartitionService.hodge_twist(TTPoly()) is None

    class TestSystems:
        def test_rank_one_values(self):
            assert PartitionService.syst_hodge(1, 0, 0, 1).evaluate_at_one() == 1
            assert PartitionService.syst_hodge(1, 0, 1, 1).evaluate_at_one() == 24

        def test_table_cells(self):
            cells = PartitionService.table_cells(1, 0, 1, 1, 1)
            assert [cell.value for cell in cells] == [1, 24]
            assert [(cell.g, cell.k) for cell in cells] == [(0, 1), (1, 1)]

        def test_table_cells_hodge(self):
            cells = PartitionService.table_cells(1, 0, 0, 1, 1, hodge=True)
            assert cells[0].value == "1"

        def test_unsupported_rank(self):
            with pytest.raises(UnsupportedRankError):
                PartitionService.table_cells(1, 2, 1, 0, 1)

        def test_table_consistency(self):
            assert PartitionService.table_consistency(1, 0, 2, 2).passed

    class TestClosedForm:
        def test_rank_one(self):
            g = PartitionService.g_closed(1, 0, 3, 2)
            assert g.coefficient(1, 0) == UPoly({-2: 1, 0: 1})
            assert g.coefficient(0, 1) == 1
            assert g.route == Route.CLOSED

        def test_unsupported_rank(self):
            with pytest.raises(UnsupportedRankError):
                PartitionService.g_closed(1, 2, 3, 2)

        def test_euler_specialization(self):
            g = PartitionService.euler_g(1, 0, 3, 2)
            assert g.coefficient(1).coefficient(0) == 2
            assert g.coefficient(0).coefficient(1) == 1
            assert PartitionService.euler_g(2, 1, 3, 2).coefficient(1).coefficient(
                0
            ) == 1

        def test_closed_form_at_one_is_euler_form(self):
            closed = PartitionService.g_closed(2, 1, 4, 2).series
            euler = PartitionService.euler_g(2, 1, 4, 2)
            for m in range(4):
                for y in range(-2, 3):
                    value = closed.coefficient(m).coefficient(y)
                    at_one = value.evaluate_at_one() if value else 0
                    assert at_one == euler.coefficient(m).coefficient(y)

        def test_product_formula(self):
            verdict, _, _ = PartitionService.ky_product(6, 3)
            assert verdict.passed

    class TestRoutes:
        def test_matrices_agree_with_closed_form(self):
            closed = PartitionService.g_closed(2, 1, 3, 2).series
            matrices = PartitionService.g_via_matrices(2, 1, 3, 2).series
            assert closed == matrices

        def test_dispatch(self):
            result = PartitionService.series("euler", 1, 0, 3, 2)
            assert result.route == Route.EULER
            assert result.to_dict()["series"]["var"] == "q"

        def test_f_route_starts_at_minus_one(self):
            f = PartitionService.series(Route.F, 1, 0, 2, 1)
            assert f.series.lower == -1

        @pytest.mark.parametrize("n, r", [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2)])
        def test_theta_route_agrees_with_closed_form(self, n: int, r: int):
            closed = PartitionService.g_closed(n, r, 6, 5).series
            modus = PartitionService.g_via_modus(n, r, 6, 5).series
            assert closed == modus

        @pytest.mark.parametrize("n", [2, 3])
        def test_theta_route_at_top_rank(self, n: int):
            closed = PartitionService.g_closed(n, n, 6, 2 * n + 2).series
            modus = PartitionService.g_via_modus(n, n, 6, 2 * n + 2).series
            clearing = PartitionService.modus_q0_denominator(n)

            assert closed.coefficient(0) * clearing == modus.coefficient(0) * clearing
            for m in range(1, 6):
                assert closed.coefficient(m) == modus.coefficient(m)

        @pytest.mark.parametrize("route", [Route.CLOSED, Route.MATRICES, Route.MODUS])
        def test_lower_order_is_a_prefix(self, route: Route):
            low = PartitionService.series(route, 2, 1, 3, 3).series
            high = PartitionService.series(route, 2, 1, 6, 3).series
            assert low.order == 3
            assert high.order == 6
            assert low == high

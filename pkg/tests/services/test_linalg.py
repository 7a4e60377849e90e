from fractions import Fraction

from models.rings import GaussianRational
from services.linalg import LinearAlgebraService


class TestLinearAlgebraService:
    class TestSolve:
        def test_unique_solution(self):
            assert LinearAlgebraService.solve([[1, 1], [1, -1]], [3, 1]) == [2, 1]

        def test_rational_solution(self):
            assert LinearAlgebraService.solve([[2, 0], [0, 3]], [1, 1]) == [
                Fraction(1, 2),
                Fraction(1, 3),
            ]

        def test_inconsistent(self):
            assert LinearAlgebraService.solve([[1, 1], [1, 1]], [1, 2]) is None

        def test_free_column_is_zero(self):
            assert LinearAlgebraService.solve([[0, 1], [0, 2]], [5, 10]) == [0, 5]

        def test_gaussian_entries(self):
            i = GaussianRational(0, 1)
            assert LinearAlgebraService.solve([[i]], [GaussianRational(0, 2)]) == [2]

        def test_input_is_not_modified(self):
            matrix = [[1, 1], [1, -1]]
            LinearAlgebraService.solve(matrix, [3, 1])
            assert matrix == [[1, 1], [1, -1]]

    class TestRank:
        def test_rank(self):
            assert LinearAlgebraService.rank([[1, 2], [2, 4]]) == 1
            assert LinearAlgebraService.rank([[1, 0], [0, 1], [1, 1]]) == 2
            assert LinearAlgebraService.rank([]) == 0

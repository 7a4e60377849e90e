from typing import List, Optional, Sequence

from models.rings import divide_scalar


def _copy(matrix: Sequence[Sequence]) -> List[List]:
    return [list(row) for row in matrix]


class LinearAlgebraService:
    """Exact Gaussian elimination over Q or Q(i)."""

    @staticmethod
    def row_echelon(matrix: List[List], rhs: Optional[List] = None) -> List[int]:
        """Row echelon form in place, rhs alongside; returns the free columns."""
        free_columns: List[int] = []
        rows = len(matrix)
        if not rows:
            return free_columns
        columns = len(matrix[0])
        pivot_row = 0
        for pivot_column in range(columns):
            for row in range(pivot_row, rows):
                if matrix[row][pivot_column] != 0:
                    break
            else:
                free_columns.append(pivot_column)
                continue
            if row != pivot_row:
                matrix[pivot_row], matrix[row] = matrix[row], matrix[pivot_row]
                if rhs is not None:
                    rhs[pivot_row], rhs[row] = rhs[row], rhs[pivot_row]
            pivot = matrix[pivot_row][pivot_column]
            for row in range(pivot_row + 1, rows):
                entry = matrix[row][pivot_column]
                if entry == 0:
                    continue
                factor = divide_scalar(entry, pivot)
                for column in range(pivot_column, columns):
                    matrix[row][column] -= matrix[pivot_row][column] * factor
                if rhs is not None:
                    rhs[row] -= rhs[pivot_row] * factor
            pivot_row += 1
        return free_columns

    @staticmethod
    def back_substitution(
        matrix: List[List], rhs: List, free_columns: List[int]
    ) -> Optional[List]:
        """Solution with every free variable set to 0, or None when inconsistent."""
        columns = len(matrix[0])
        rank = columns - len(free_columns)
        if any(value != 0 for value in rhs[rank:]):
            return None
        free = set(free_columns)
        pivots = [column for column in range(columns) if column not in free]
        solution: List = [0] * columns
        for row in range(len(pivots) - 1, -1, -1):
            pivot_column = pivots[row]
            total = -rhs[row]
            for column in range(pivot_column + 1, columns):
                if solution[column] != 0:
                    total = total + matrix[row][column] * solution[column]
            solution[pivot_column] = divide_scalar(-total, matrix[row][pivot_column])
        return solution

    @staticmethod
    def rank(matrix: Sequence[Sequence]) -> int:
        if not matrix:
            return 0
        copy = _copy(matrix)
        return len(copy[0]) - len(LinearAlgebraService.row_echelon(copy))

    @staticmethod
    def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[List]:
        """Exact solution of matrix * x = rhs, free variables pinned to 0."""
        copy, target = _copy(matrix), list(rhs)
        free_columns = LinearAlgebraService.row_echelon(copy, target)
        return LinearAlgebraService.back_substitution(copy, target, free_columns)

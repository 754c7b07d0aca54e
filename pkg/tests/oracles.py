"""Independent brute-force oracles for the test suite.

Everything here recomputes results from first principles with itertools
(choose columns, then assign rows), deliberately avoiding the library's
depth-first enumerators and incremental-weight walks so the two routes
stay independent.
"""

import itertools
import math

from mlrook.boards import FerrersBoard


def boards_up_to(max_columns, max_height, min_columns=0):
    """Every Ferrers board with at most max_columns columns of height
    at most max_height, the empty board included."""
    for n in range(min_columns, max_columns + 1):
        for heights in itertools.combinations_with_replacement(
            range(max_height + 1), n
        ):
            yield FerrersBoard(heights)


def brute_file_cells(board, k):
    """All k-rook file placements as sorted cell tuples: pick a column
    subset, then assign each column any of its rows."""
    columns = range(1, board.n + 1)
    for subset in itertools.combinations(columns, k):
        row_ranges = [range(1, board.heights[c - 1] + 1) for c in subset]
        for rows in itertools.product(*row_ranges):
            yield tuple(zip(subset, rows))


def file_count_formula(board, k):
    """Number of k-rook file placements: the k-th elementary symmetric
    function of the column heights."""
    return sum(
        math.prod(board.heights[c - 1] for c in subset)
        for subset in itertools.combinations(range(1, board.n + 1), k)
    )


def brute_level_numbers(board, m):
    """Top-down level cell counts by iterating over every single cell."""
    n = board.n
    counts = [0] * n
    for col in range(1, n + 1):
        for row in range(1, board.heights[col - 1] + 1):
            level = (row + m - 1) // m
            counts[level - 1] += 1
    counts.reverse()
    return tuple(counts)


def brute_weight(cells, m):
    """Weight of a placement given as cell tuples, from the definition."""
    row_counts = {}
    for _, row in cells:
        row_counts[row] = row_counts.get(row, 0) + 1
    total = 1
    for count in row_counts.values():
        for i in range(count):
            total *= 1 - m * i
    return total


def is_mlevel_cells(cells, m):
    levels = [(row + m - 1) // m for _, row in cells]
    return len(levels) == len(set(levels))


def brute_rook_count(board, m, k):
    """Number of k-rook m-level placements by filtering all file placements."""
    return sum(1 for cells in brute_file_cells(board, k) if is_mlevel_cells(cells, m))


def brute_weighted_file_number(board, m, k):
    """Sum of weights over all k-rook file placements, built independently."""
    return sum(brute_weight(cells, m) for cells in brute_file_cells(board, k))


def brute_singleton_by_levels(board, m):
    """Restated singleton rule: no level is partially entered (1..m-1 of
    its m cells) by two or more columns."""
    if board.n == 0 or board.heights[-1] == 0:
        return True
    top_level = (board.heights[-1] + m - 1) // m
    for level in range(1, top_level + 1):
        partial = 0
        for h in board.heights:
            cells_in_level = min(m, max(0, h - m * (level - 1)))
            if 1 <= cells_in_level <= m - 1:
                partial += 1
        if partial >= 2:
            return False
    return True

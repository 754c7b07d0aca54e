"""File, rook, and m-level rook placements with canonical enumeration.

A *file placement* puts at most one rook per column; rows are free.
Requiring distinct rows gives classical rook placements, and requiring
distinct levels (blocks of m rows) gives m-level rook placements, so
the three kinds nest: m-level rook placements are rook placements are
file placements.

Enumeration is depth-first over columns with a skip branch per column,
yielding placements in ascending lexicographic order of their sorted
(column, row) cells.  Streams are generated lazily; counting never
materializes the placements.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .boards import Cell, FerrersBoard, _check_m

__all__ = [
    "FilePlacement",
    "InvalidPlacementError",
    "PlacementKind",
    "classify_placement",
    "enumerate_file_placements",
    "enumerate_m_level_rook_placements",
    "is_m_level_rook_placement",
    "is_rook_placement",
    "rook_number",
    "rook_numbers",
]


class InvalidPlacementError(ValueError):
    """A placement repeats a column or leaves the board."""


@dataclass(frozen=True, eq=False)
class FilePlacement:
    """Rooks on a Ferrers board, at most one per column.

    Cells are kept sorted by column.  Equality and hashing look only at
    the occupied cells, so placements with identical rooks on different
    boards compare equal; the board is carried for validation.
    """

    board: FerrersBoard
    cells: tuple[Cell, ...]

    def __post_init__(self) -> None:
        cells = tuple(sorted(Cell(c, r) for c, r in self.cells))
        object.__setattr__(self, "cells", cells)
        prev_col = 0
        for col, row in cells:
            if col == prev_col:
                raise InvalidPlacementError(f"column {col} is occupied twice")
            if not self.board.contains(col, row):
                raise InvalidPlacementError(f"cell {col}:{row} is not on the board")
            prev_col = col

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FilePlacement):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def occupied(self) -> dict[int, int]:
        """Mapping column -> row of the occupied cells."""
        return {col: row for col, row in self.cells}

    def row_counts(self) -> dict[int, int]:
        """Number of rooks in each occupied row."""
        counts: dict[int, int] = {}
        for _, row in self.cells:
            counts[row] = counts.get(row, 0) + 1
        return counts

    def level_counts(self, m: int) -> dict[int, int]:
        """Number of rooks in each occupied level."""
        _check_m(m)
        counts: dict[int, int] = {}
        for _, row in self.cells:
            level = (row + m - 1) // m
            counts[level] = counts.get(level, 0) + 1
        return counts

    def with_rook(self, column: int, row: int) -> "FilePlacement":
        """New placement with one more rook; the column must be free."""
        return FilePlacement(self.board, self.cells + (Cell(column, row),))

    def without_column(self, column: int) -> "FilePlacement":
        """New placement with the rook of ``column`` removed."""
        kept = tuple(cell for cell in self.cells if cell.column != column)
        if len(kept) == len(self.cells):
            raise ValueError(f"column {column} holds no rook")
        return FilePlacement(self.board, kept)

    def to_string(self) -> str:
        """Text form ``"col:row;col:row"`` sorted by column; empty for no rooks."""
        return ";".join(f"{col}:{row}" for col, row in self.cells)

    @classmethod
    def from_string(cls, board: FerrersBoard, text: str) -> "FilePlacement":
        text = text.strip()
        if not text:
            return cls(board, ())
        cells = []
        for token in text.split(";"):
            try:
                col_text, row_text = token.split(":")
                cells.append(Cell(int(col_text), int(row_text)))
            except ValueError:
                raise InvalidPlacementError(
                    f"bad placement token {token!r}, expected 'col:row'"
                ) from None
        return cls(board, tuple(cells))

    def __str__(self) -> str:
        return self.to_string()


class PlacementKind(str, Enum):
    """Nested placement classes: MLEVEL is a ROOK is a FILE placement."""

    FILE = "file"
    ROOK = "rook"
    MLEVEL = "mlevel"


def is_m_level_rook_placement(placement: FilePlacement, m: int) -> bool:
    """True iff no two rooks share a level (columns are distinct already)."""
    _check_m(m)
    seen: set[int] = set()
    for _, row in placement.cells:
        level = (row + m - 1) // m
        if level in seen:
            return False
        seen.add(level)
    return True


def is_rook_placement(placement: FilePlacement) -> bool:
    """True iff no two rooks share a row."""
    return is_m_level_rook_placement(placement, 1)


def classify_placement(placement: FilePlacement, m: int) -> PlacementKind:
    """Most specific kind of the placement for block size m."""
    if is_m_level_rook_placement(placement, m):
        return PlacementKind.MLEVEL
    if is_rook_placement(placement):
        return PlacementKind.ROOK
    return PlacementKind.FILE


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError(f"rook count k must be non-negative, got {k}")


def enumerate_file_placements(board: FerrersBoard, k: int) -> Iterator[FilePlacement]:
    """Yield every file placement of exactly k rooks, in canonical order.

    k = 0 yields the single empty placement; k > n yields nothing.
    """
    _check_k(k)
    n = board.n
    heights = board.heights
    acc: list[Cell] = []

    def walk(col: int, need: int) -> Iterator[FilePlacement]:
        if need == 0:
            yield FilePlacement(board, tuple(acc))
            return
        if n - col + 1 < need:
            return
        for row in range(1, heights[col - 1] + 1):
            acc.append(Cell(col, row))
            yield from walk(col + 1, need - 1)
            acc.pop()
        yield from walk(col + 1, need)

    yield from walk(1, k)


def enumerate_m_level_rook_placements(
    board: FerrersBoard, m: int, k: int
) -> Iterator[FilePlacement]:
    """Yield every m-level rook placement of exactly k rooks, canonically.

    Equivalent to filtering the file placements by
    ``is_m_level_rook_placement``, but prunes shared levels during the
    column-by-column walk.
    """
    _check_m(m)
    _check_k(k)
    n = board.n
    heights = board.heights
    acc: list[Cell] = []
    used_levels: set[int] = set()

    def walk(col: int, need: int) -> Iterator[FilePlacement]:
        if need == 0:
            yield FilePlacement(board, tuple(acc))
            return
        if n - col + 1 < need:
            return
        for row in range(1, heights[col - 1] + 1):
            level = (row + m - 1) // m
            if level in used_levels:
                continue
            used_levels.add(level)
            acc.append(Cell(col, row))
            yield from walk(col + 1, need - 1)
            acc.pop()
            used_levels.remove(level)
        yield from walk(col + 1, need)

    yield from walk(1, k)


def rook_numbers(board: FerrersBoard, m: int) -> tuple[int, ...]:
    """All m-level rook numbers ``(r_0, ..., r_n)`` by exhaustive count.

    The count walks the same column-by-column tree as the enumerator but
    allocates nothing per placement.
    """
    _check_m(m)
    n = board.n
    heights = board.heights
    counts = [0] * (n + 1)
    used_levels: set[int] = set()

    def walk(col: int, placed: int) -> None:
        if col > n:
            counts[placed] += 1
            return
        walk(col + 1, placed)
        for row in range(1, heights[col - 1] + 1):
            level = (row + m - 1) // m
            if level not in used_levels:
                used_levels.add(level)
                walk(col + 1, placed + 1)
                used_levels.remove(level)

    walk(1, 0)
    return tuple(counts)


def rook_number(board: FerrersBoard, m: int, k: int) -> int:
    """The m-level rook number ``r_k``; 0 for k beyond the column count."""
    _check_k(k)
    if k > board.n:
        return 0
    return rook_numbers(board, m)[k]

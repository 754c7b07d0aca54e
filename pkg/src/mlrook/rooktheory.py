"""Rook polynomials, weighted file numbers, and their product forms.

For an n-column Ferrers board and block size m the central object is

    p_m(B, x) = sum_k r_k * ff(x, n-k, m),

the generating polynomial of the m-level rook numbers over the
m-falling basis.  Three root multisets give product forms for it:

- column form ``b_i - m*(i-1)``: expands to p_m exactly on singleton
  boards (for m = 1 this is the classical column factorization, valid
  on every Ferrers board);
- zone form: per column, the m-floor shifted by ``-(i-1)*m``, plus the
  zone's remainder on the zone's last column;
- level form ``l_j - m*(j-1)`` from the top-down level numbers.

The zone and level forms expand to p_m on every Ferrers board.  The
column form, on every Ferrers board, expands instead to the generating
polynomial of the weighted file numbers f_k, where each file placement
is weighted by a product over rows of ``ff(1, rooks_in_row, m)``.  On
singleton boards the two generating polynomials coincide, which forces
the weights of non-rook file placements to cancel (see cancellation).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Collection, Iterable, Mapping

from .boards import (
    FerrersBoard,
    _check_m,
    is_singleton,
    level_numbers,
    zones,
)
from .ffpoly import FFPoly, RootMultiset, expand_roots, m_falling_factorial
from .placements import FilePlacement, rook_numbers

__all__ = [
    "FactorizationReport",
    "br_roots",
    "census_level_numbers",
    "gjw_roots",
    "level_roots",
    "m_level_equivalent",
    "m_level_rook_poly",
    "verify_factorizations",
    "weight",
    "weighted_file_number",
    "weighted_file_numbers",
    "weighted_file_poly",
    "zone_roots",
]

CHECK_NAMES = ("gjw", "br", "zone", "level", "file")


def weight(placement: FilePlacement, m: int) -> int:
    """Product over rows of ``ff(1, rooks_in_row, m)``.

    Equals 1 on every m-level rook placement (each row holds 0 or 1
    rooks) and may be negative or large otherwise.
    """
    _check_m(m)
    result = 1
    for count in placement.row_counts().values():
        result *= m_falling_factorial(1, count, m)
    return result


def weighted_file_numbers(board: FerrersBoard, m: int) -> tuple[int, ...]:
    """All weighted file numbers ``(f_0, ..., f_n)``, exactly.

    Walks every file placement once, column by column, updating the
    weight incrementally: adding a rook to a row already holding c rooks
    multiplies the weight by ``1 - c*m``.
    """
    _check_m(m)
    n = board.n
    heights = board.heights
    sums = [0] * (n + 1)
    row_rooks = [0] * ((heights[-1] if n else 0) + 1)

    def walk(col: int, placed: int, w: int) -> None:
        if col > n:
            sums[placed] += w
            return
        walk(col + 1, placed, w)
        for row in range(1, heights[col - 1] + 1):
            c = row_rooks[row]
            row_rooks[row] = c + 1
            walk(col + 1, placed + 1, w * (1 - c * m))
            row_rooks[row] = c

    walk(1, 0, 1)
    return tuple(sums)


def weighted_file_number(board: FerrersBoard, m: int, k: int) -> int:
    """Sum of weights over all file placements of exactly k rooks."""
    if k < 0:
        raise ValueError(f"rook count k must be non-negative, got {k}")
    if k > board.n:
        return 0
    return weighted_file_numbers(board, m)[k]


def gjw_roots(board: FerrersBoard) -> RootMultiset:
    """Column root constants ``b_i - (i-1)`` of the classical product form."""
    return RootMultiset(tuple(b - i for i, b in enumerate(board.heights)))


def br_roots(board: FerrersBoard, m: int) -> RootMultiset:
    """Column root constants ``b_i - m*(i-1)``.

    Defined for every Ferrers board; the expansion equals p_m only on
    singleton boards, but always equals the weighted-file polynomial.
    """
    _check_m(m)
    return RootMultiset(tuple(b - m * i for i, b in enumerate(board.heights)))


def zone_roots(board: FerrersBoard, m: int) -> RootMultiset:
    """Zone root constants: per column the m-floor shifted by ``-(i-1)*m``,
    with the zone remainder added on the last column of each zone."""
    _check_m(m)
    constants = []
    for zone in zones(board, m):
        for i in range(zone.start, zone.end + 1):
            c = zone.floor - (i - 1) * m
            if i == zone.end:
                c += zone.remainder
            constants.append(c)
    return RootMultiset(tuple(constants))


def level_roots(board: FerrersBoard, m: int) -> RootMultiset:
    """Level root constants ``l_j - m*(j-1)`` from the top-down level numbers.

    Requires the board to fit its n ambient levels (``b_n <= m*n``).
    """
    levels = level_numbers(board, m)
    return RootMultiset(tuple(l - m * j for j, l in enumerate(levels)))


def _basis_sum_poly(values: Iterable[int], m: int) -> FFPoly:
    # sum_k values[k] * ff(x, n-k, m), expanded into the power basis
    return FFPoly.mfalling(tuple(reversed(tuple(values))), m).to_power()


def m_level_rook_poly(board: FerrersBoard, m: int) -> FFPoly:
    """The polynomial ``sum_k r_k * ff(x, n-k, m)`` in the power basis,
    with the rook numbers obtained by enumeration."""
    return _basis_sum_poly(rook_numbers(board, m), m)


def weighted_file_poly(board: FerrersBoard, m: int) -> FFPoly:
    """The polynomial ``sum_k f_k * ff(x, n-k, m)`` in the power basis,
    with the weighted file numbers obtained by enumeration."""
    return _basis_sum_poly(weighted_file_numbers(board, m), m)


@dataclass(frozen=True)
class FactorizationReport:
    """Outcome of the product-form identity checks for one (board, m).

    Each field is True/False when the check ran and None when it was not
    applicable (or not requested): ``gjw`` runs only for m = 1 and
    ``br_equals_pm`` only on singleton boards; ``level_equals_pm`` needs
    the board to fit its n ambient levels.  ``details`` holds both
    power-basis coefficient vectors for every failed check.
    """

    board: FerrersBoard
    m: int
    gjw: bool | None
    br_equals_pm: bool | None
    zone_equals_pm: bool | None
    level_equals_pm: bool | None
    file_equals_br_product: bool | None
    details: Mapping[str, dict] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """True iff no check that ran failed."""
        return False not in (
            self.gjw,
            self.br_equals_pm,
            self.zone_equals_pm,
            self.level_equals_pm,
            self.file_equals_br_product,
        )

    def to_json_dict(self) -> dict:
        return {
            "board": str(self.board),
            "m": self.m,
            "checks": {
                "gjw": self.gjw,
                "br_equals_pm": self.br_equals_pm,
                "zone": self.zone_equals_pm,
                "level": self.level_equals_pm,
                "file": self.file_equals_br_product,
            },
            "details": {name: dict(d) for name, d in self.details.items()},
        }


def verify_factorizations(
    board: FerrersBoard, m: int, checks: Collection[str] | None = None
) -> FactorizationReport:
    """Compare the expanded product forms against the enumerated polynomials.

    ``checks`` limits which identities run (names from ``CHECK_NAMES``);
    by default all applicable ones run.  Comparisons are coefficient-wise
    on fully expanded power-basis polynomials.
    """
    _check_m(m)
    requested = frozenset(checks) if checks is not None else frozenset(CHECK_NAMES)
    unknown = requested.difference(CHECK_NAMES)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")

    details: dict[str, dict] = {}

    def compare(name: str, lhs: FFPoly, rhs: FFPoly) -> bool:
        if lhs == rhs:
            return True
        details[name] = {"lhs": list(lhs.coeffs), "rhs": list(rhs.coeffs)}
        return False

    pm: FFPoly | None = None
    if requested.intersection(("gjw", "br", "zone", "level")):
        pm = m_level_rook_poly(board, m)

    gjw = None
    if "gjw" in requested and m == 1:
        gjw = compare("gjw", expand_roots(gjw_roots(board)), pm)

    br = None
    if "br" in requested and is_singleton(board, m):
        br = compare("br_equals_pm", expand_roots(br_roots(board, m)), pm)

    zone = None
    if "zone" in requested:
        zone = compare("zone", expand_roots(zone_roots(board, m)), pm)

    level = None
    if "level" in requested and (board.n == 0 or board.heights[-1] <= m * board.n):
        level = compare("level", expand_roots(level_roots(board, m)), pm)

    file_check = None
    if "file" in requested:
        file_check = compare(
            "file", weighted_file_poly(board, m), expand_roots(br_roots(board, m))
        )

    return FactorizationReport(
        board=board,
        m=m,
        gjw=gjw,
        br_equals_pm=br,
        zone_equals_pm=zone,
        level_equals_pm=level,
        file_equals_br_product=file_check,
        details=details,
    )


def m_level_equivalent(b1: FerrersBoard, b2: FerrersBoard, m: int) -> bool:
    """Same column count and identical m-level rook numbers.

    For equal column counts this is the same as having equal p_m.
    """
    _check_m(m)
    return b1.n == b2.n and rook_numbers(b1, m) == rook_numbers(b2, m)


@lru_cache(maxsize=32)
def _census_table(n: int, m: int) -> dict[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    # level numbers -> all matching height vectors, over the complete
    # finite space of n-column boards inside the n-level ambient grid
    table: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for heights in combinations_with_replacement(range(m * n + 1), n):
        key = level_numbers(FerrersBoard(heights), m)
        table.setdefault(key, []).append(heights)
    return {key: tuple(boards) for key, boards in table.items()}


def census_level_numbers(
    levels: Iterable[int], m: int
) -> tuple[FerrersBoard, ...]:
    """All Ferrers boards whose top-down level numbers equal ``levels``.

    Exhausts every weakly increasing height vector with ``b_n <= m*n``
    (the bound forced by having n level numbers), so the answer is
    complete.  Boards come back in lexicographic height order; the empty
    tuple is a valid (empty) answer.
    """
    _check_m(m)
    levels = tuple(levels)
    for l in levels:
        if not isinstance(l, int) or l < 0:
            raise ValueError(f"level number {l!r} is not a non-negative integer")
    table = _census_table(len(levels), m)
    return tuple(FerrersBoard(h) for h in table.get(levels, ()))

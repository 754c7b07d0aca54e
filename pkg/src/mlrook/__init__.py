"""Exact m-level rook theory on Ferrers boards.

Boards, file/rook/m-level rook placements, weighted file numbers, the
falling-factorial polynomial machinery, the product-form factorization
identities, and the cancellation partition that explains why non-rook
weights sum to zero on singleton boards.  Everything is exact integer
arithmetic; all values are immutable and all operations pure.
"""

from .boards import (
    AmbientSizeError,
    Cell,
    FerrersBoard,
    InvalidBoardError,
    Zone,
    is_singleton,
    level_numbers,
    level_of_row,
    levels_spanned,
    m_floor,
    make_board,
    parse_board,
    rows_of_level,
    zones,
)
from .cancellation import (
    CancellationClass,
    CoverReport,
    NonSingletonBoardError,
    canonical_class,
    canonical_level,
    class_members,
    class_weight_sum,
    nonrook_file_placements,
    reintroduction_sum,
    verify_cover,
)
from .ffpoly import (
    FFPoly,
    RootMultiset,
    expand_roots,
    m_falling_factorial,
    to_basis,
)
from .placements import (
    FilePlacement,
    InvalidPlacementError,
    PlacementKind,
    classify_placement,
    enumerate_file_placements,
    enumerate_m_level_rook_placements,
    is_m_level_rook_placement,
    is_rook_placement,
    rook_number,
    rook_numbers,
)
from .rooktheory import (
    FactorizationReport,
    br_roots,
    census_level_numbers,
    gjw_roots,
    level_roots,
    m_level_equivalent,
    m_level_rook_poly,
    verify_factorizations,
    weight,
    weighted_file_number,
    weighted_file_numbers,
    weighted_file_poly,
    zone_roots,
)

__version__ = "0.1.0"

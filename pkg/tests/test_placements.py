import pytest

from mlrook.boards import FerrersBoard, make_board
from mlrook.placements import (
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
from oracles import boards_up_to, brute_rook_count, file_count_formula

SQ4 = make_board((4, 4, 4, 4))

# placements lifted from small worked figures
FIG_ROOK_SQ4 = ((1, 4), (2, 2), (3, 1), (4, 3))
FIG_FILE = ((1, 2), (3, 4), (4, 2), (5, 4), (6, 4))


class TestFilePlacementValue:
    def test_duplicate_column_rejected(self):
        with pytest.raises(InvalidPlacementError):
            FilePlacement(SQ4, ((1, 1), (1, 2)))

    def test_off_board_rejected(self):
        with pytest.raises(InvalidPlacementError, match="2:2"):
            FilePlacement(make_board((1, 1)), ((2, 2),))

    def test_cells_sorted_by_column(self):
        p = FilePlacement(SQ4, ((3, 1), (1, 2)))
        assert [c.column for c in p.cells] == [1, 3]

    def test_equality_ignores_board(self):
        a = FilePlacement(make_board((2, 2)), ((1, 1),))
        b = FilePlacement(make_board((1, 1)), ((1, 1),))
        assert a == b
        assert hash(a) == hash(b)

    def test_occupied_and_counts(self):
        p = FilePlacement(SQ4, FIG_ROOK_SQ4)
        assert p.occupied == {1: 4, 2: 2, 3: 1, 4: 3}
        assert p.row_counts() == {4: 1, 2: 1, 1: 1, 3: 1}
        assert p.level_counts(2) == {2: 2, 1: 2}

    def test_with_and_without_rook(self):
        p = FilePlacement(make_board((1, 2)), ((1, 1),))
        q = p.with_rook(2, 2)
        assert len(q) == 2
        assert q.without_column(2) == p
        with pytest.raises(ValueError):
            p.without_column(2)

    def test_string_round_trip(self):
        board = make_board((2, 2, 4, 4, 4, 4))
        p = FilePlacement(board, FIG_FILE)
        assert p.to_string() == "1:2;3:4;4:2;5:4;6:4"
        assert FilePlacement.from_string(board, p.to_string()) == p
        assert FilePlacement.from_string(board, "") == FilePlacement(board, ())

    def test_bad_string_rejected(self):
        with pytest.raises(InvalidPlacementError):
            FilePlacement.from_string(SQ4, "1-2")


class TestEnumerateFile:
    def test_counts_small(self):
        board = make_board((1, 2))
        assert len(list(enumerate_file_placements(board, 2))) == 2
        assert len(list(enumerate_file_placements(board, 1))) == 3

    def test_k_zero_single_empty(self):
        for board in (make_board(()), make_board((0, 3)), SQ4):
            placements = list(enumerate_file_placements(board, 0))
            assert placements == [FilePlacement(board, ())]

    def test_k_beyond_columns_empty_stream(self):
        assert list(enumerate_file_placements(make_board((1, 2)), 3)) == []

    def test_negative_k_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_file_placements(SQ4, -1))

    def test_canonical_order(self):
        board = make_board((1, 2))
        assert [p.to_string() for p in enumerate_file_placements(board, 1)] == [
            "1:1",
            "2:1",
            "2:2",
        ]
        assert [p.to_string() for p in enumerate_file_placements(board, 2)] == [
            "1:1;2:1",
            "1:1;2:2",
        ]

    def test_lexicographic_and_distinct(self):
        board = make_board((2, 3, 3))
        for k in range(4):
            placements = list(enumerate_file_placements(board, k))
            cells = [p.cells for p in placements]
            assert cells == sorted(cells)
            assert len(set(cells)) == len(cells)

    def test_count_matches_symmetric_function(self):
        for board in boards_up_to(5, 6):
            for k in range(board.n + 1):
                count = sum(1 for _ in enumerate_file_placements(board, k))
                assert count == file_count_formula(board, k), (board, k)


class TestEnumerateMLevel:
    def test_sq4_full_placements(self):
        assert len(list(enumerate_m_level_rook_placements(SQ4, 1, 4))) == 24

    def test_shared_level_blocks(self):
        assert list(enumerate_m_level_rook_placements(make_board((1, 2)), 2, 2)) == []

    def test_k_zero(self):
        assert len(list(enumerate_m_level_rook_placements(SQ4, 3, 0))) == 1

    def test_equals_filtered_file_placements(self):
        for board in boards_up_to(3, 4):
            for m in (1, 2, 3):
                for k in range(board.n + 1):
                    filtered = {
                        p
                        for p in enumerate_file_placements(board, k)
                        if is_m_level_rook_placement(p, m)
                    }
                    direct = set(enumerate_m_level_rook_placements(board, m, k))
                    assert direct == filtered

    def test_yields_only_valid(self):
        for p in enumerate_m_level_rook_placements(make_board((2, 3, 5)), 2, 2):
            assert is_m_level_rook_placement(p, 2)


class TestPredicates:
    def test_figure_rook_placement(self):
        assert is_m_level_rook_placement(FilePlacement(SQ4, FIG_ROOK_SQ4), 1)

    def test_figure_file_placement_fails_m3(self):
        board = make_board((2, 2, 4, 4, 4, 4))
        p = FilePlacement(board, FIG_FILE)
        assert not is_m_level_rook_placement(p, 3)

    def test_empty_placement_always_passes(self):
        p = FilePlacement(SQ4, ())
        for m in (1, 2, 5):
            assert is_m_level_rook_placement(p, m)

    def test_classify_nesting(self):
        board = make_board((4, 4))
        same_row = FilePlacement(board, ((1, 2), (2, 2)))
        same_level = FilePlacement(board, ((1, 1), (2, 2)))
        clean = FilePlacement(board, ((1, 1), (2, 3)))
        assert classify_placement(same_row, 2) == PlacementKind.FILE
        assert classify_placement(same_level, 2) == PlacementKind.ROOK
        assert classify_placement(clean, 2) == PlacementKind.MLEVEL
        # every m-level placement is a rook placement
        assert is_rook_placement(clean)


class TestRookNumbers:
    def test_sq4(self):
        assert rook_number(SQ4, 1, 4) == 24

    def test_k_zero_is_one(self):
        for board in (make_board(()), make_board((1, 2)), SQ4):
            for m in (1, 2, 3):
                assert rook_number(board, m, 0) == 1

    def test_shared_level(self):
        assert rook_number(make_board((1, 2)), 2, 2) == 0

    def test_k_beyond_columns(self):
        assert rook_number(make_board((1, 2)), 1, 5) == 0

    def test_vector_matches_enumeration_and_oracle(self):
        for board in boards_up_to(4, 5):
            for m in (1, 2, 3):
                vector = rook_numbers(board, m)
                assert vector[0] == 1
                for k in range(board.n + 1):
                    count = sum(1 for _ in enumerate_m_level_rook_placements(board, m, k))
                    assert vector[k] == count
                    assert vector[k] == brute_rook_count(board, m, k)

    def test_zero_beyond_spanned_levels(self):
        # (2,2): both columns inside level 1 when m = 2
        assert rook_numbers(make_board((2, 2)), 2) == (1, 4, 0)
        # nonempty columns bound: (0,0,3) has one usable column
        assert rook_numbers(make_board((0, 0, 3)), 1)[2] == 0

    def test_vanishing_bounds_family(self):
        from mlrook.boards import levels_spanned

        for board in boards_up_to(4, 5):
            for m in (1, 2, 3):
                vector = rook_numbers(board, m)
                nonempty = sum(1 for h in board.heights if h)
                spanned = levels_spanned(board, m)
                for k in range(board.n + 1):
                    if k > nonempty or k > spanned:
                        assert vector[k] == 0, (board, m, k)

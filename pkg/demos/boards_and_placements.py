"""Tour of boards and placements.

Builds a small Ferrers board, inspects its level geometry for a couple
of block sizes, and enumerates the three nested placement kinds.

Run:  python demos/boards_and_placements.py
"""

from mlrook import (
    enumerate_file_placements,
    enumerate_m_level_rook_placements,
    is_singleton,
    level_numbers,
    make_board,
    rook_numbers,
    weighted_file_numbers,
    zones,
)

board = make_board((1, 1, 2, 4))
print(f"board {board}: {board.n} columns, {board.total_cells} cells")

for m in (1, 2, 3):
    print(f"\nblock size m={m}")
    print("  zones:", ", ".join(
        f"[{z.start},{z.end}] floor={z.floor} remainder={z.remainder}"
        for z in zones(board, m)
    ))
    print("  level numbers (top down):", level_numbers(board, m))
    print("  singleton:", is_singleton(board, m))

print("\nplacements of 2 rooks on", board)
print("  file placements:", [p.to_string() for p in enumerate_file_placements(board, 2)])
print("  2-level rook placements:",
      [p.to_string() for p in enumerate_m_level_rook_placements(board, 2, 2)])

print("\ncounting on the same board")
for m in (1, 2):
    print(f"  m={m}: rook numbers {rook_numbers(board, m)}"
          f"  weighted file numbers {weighted_file_numbers(board, m)}")

square = make_board((4, 4, 4, 4))
print(f"\nthe 4x4 square has {rook_numbers(square, 1)[4]} ways"
      " to place 4 non-attacking rooks (4 factorial)")

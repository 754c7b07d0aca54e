"""Tour of the product-form factorizations.

Shows the four root constructions on a board that is singleton for m=2
but not for m=3, and how the column product tracks the weighted file
polynomial (not the rook polynomial) once the singleton property fails.

Run:  python demos/factorizations.py
"""

from mlrook import (
    br_roots,
    census_level_numbers,
    expand_roots,
    gjw_roots,
    level_roots,
    m_level_equivalent,
    m_level_rook_poly,
    make_board,
    verify_factorizations,
    weighted_file_poly,
    zone_roots,
)

board = make_board((1, 2, 2, 3))

for m in (2, 3):
    print(f"board {board}, m={m}")
    pm = m_level_rook_poly(board, m)
    fp = weighted_file_poly(board, m)
    print("  rook polynomial p_m:   ", pm)
    print("  weighted file poly:    ", fp)
    print("  column roots:          ", tuple(br_roots(board, m)))
    print("  zone roots:            ", tuple(zone_roots(board, m)))
    print("  level roots:           ", tuple(level_roots(board, m)))
    print("  column product == p_m? ", expand_roots(br_roots(board, m)) == pm)
    print("  column product == file?", expand_roots(br_roots(board, m)) == fp)
    report = verify_factorizations(board, m)
    print("  verified checks:       ", report.to_json_dict()["checks"])
    print()

a, b = make_board((1, 1, 2, 4)), make_board((1, 2, 2, 3))
print(f"classical roots of {a}: {tuple(gjw_roots(a))}")
print(f"classical roots of {b}: {tuple(gjw_roots(b))}")
print(f"rook equivalent at m=1? {m_level_equivalent(a, b, 1)}")
print(f"rook equivalent at m=2? {m_level_equivalent(a, b, 2)}")

query = (0, 0, 2, 6)
matches = census_level_numbers(query, 2)
print(f"\nboards with top-down level numbers {query} at m=2:")
for match in matches:
    print("  ", match)

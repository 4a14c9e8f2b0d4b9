"""Hand-transcribed reference tables for the exceptional decompositions.

These are the published tabulations of the summand weights of the exterior
powers of the cotangent bundle on the Cayley plane (16 grades) and the
Freudenthal variety (27 grades), together with the minimal-twist column.
They are audit INPUT, not engine output: ``twists.table_audit`` recomputes
every row independently and reports each cell that differs.  Transcription
is verbatim, typos included, so a reported mismatch means the engine and the
printed table genuinely disagree.

Weights are coefficient tuples in the fundamental-weight basis (Bourbaki);
rows list the summands in the printed order.
"""

from __future__ import annotations

# Cayley plane rows: p -> (summand weights, l(p)).
TABLE_E6: dict[int, tuple[tuple[tuple[int, ...], ...], int]] = {
    1: (((-2, 0, 1, 0, 0, 0),), 2),
    2: (((-3, 0, 0, 1, 0, 0),), 3),
    3: (((-4, 1, 0, 0, 1, 0),), 4),
    4: (((-5, 2, 0, 0, 0, 1), (-5, 0, 0, 0, 2, 0)), 5),
    5: (((-6, 3, 0, 0, 0, 0), (-6, 1, 0, 0, 1, 1)), 6),
    6: (((-7, 2, 0, 0, 1, 0), (-7, 0, 0, 1, 0, 2)), 7),
    7: (((-8, 1, 0, 1, 0, 1), (-8, 0, 1, 0, 0, 3)), 8),
    8: (((-9, 0, 0, 2, 0, 0), (-9, 1, 1, 0, 0, 6), (-8, 0, 0, 0, 0, 4)), 8),
    9: (((-10, 0, 1, 1, 0, 1), (-9, 1, 0, 0, 0, 3)), 9),
    10: (((-10, 0, 0, 1, 0, 2), (-11, 0, 2, 0, 1, 0)), 10),
    11: (((-12, 0, 3, 0, 0, 0), (-11, 0, 1, 0, 1, 1)), 11),
    12: (((-12, 0, 2, 0, 0, 1), (-11, 0, 0, 0, 2, 0)), 11),
    13: (((-12, 0, 1, 0, 1, 0),), 12),
    14: (((-12, 0, 0, 1, 0, 0),), 12),
    15: (((-12, 1, 0, 0, 0, 0),), 12),
}

# Freudenthal variety rows: p -> (summand weights, l(p)).
TABLE_E7: dict[int, tuple[tuple[tuple[int, ...], ...], int]] = {
    1: (((0, 0, 0, 0, 0, 1, -2),), 2),
    2: (((0, 0, 0, 0, 1, 0, -3),), 3),
    3: (((0, 0, 0, 1, 0, 0, -4),), 4),
    4: (((0, 1, 1, 0, 0, 0, -5),), 5),
    5: (((0, 0, 2, 0, 0, 0, -6), (1, 2, 0, 0, 0, 0, -6)), 6),
    6: (((0, 3, 0, 0, 0, 0, -7), (1, 1, 1, 0, 0, 0, -7)), 7),
    7: (((0, 2, 1, 0, 0, 0, -8), (2, 0, 0, 1, 0, 0, -8)), 8),
    8: (((1, 1, 0, 1, 0, 0, -9), (3, 0, 0, 0, 1, 0, -9)), 9),
    9: (((0, 0, 0, 2, 0, 0, -10), (2, 1, 0, 0, 1, 0, -10),
         (4, 0, 0, 0, 0, 1, -10)), 10),
    10: (((1, 0, 0, 1, 1, 0, -11), (3, 1, 0, 0, 0, 1, -11),
          (5, 0, 0, 0, 0, 0, -10)), 10),
    11: (((0, 0, 1, 0, 2, 0, -12), (2, 0, 0, 1, 0, 1, -12),
          (4, 1, 0, 0, 0, 0, -11)), 11),
    12: (((0, 0, 0, 0, 3, 0, -13), (1, 0, 1, 0, 1, 1, -13),
          (3, 0, 0, 1, 0, 0, -12)), 12),
    13: (((0, 0, 2, 0, 0, 2, -14), (1, 0, 0, 0, 2, 1, -14),
          (2, 0, 1, 0, 1, 0, -13)), 13),
    14: (((0, 0, 1, 0, 1, 2, -15), (1, 0, 2, 0, 0, 1, -14),
          (2, 0, 0, 0, 2, 0, -14)), 14),
    15: (((0, 0, 0, 1, 0, 3, -16), (0, 0, 3, 0, 0, 0, -14),
          (1, 0, 1, 0, 1, 1, -15)), 14),
    16: (((0, 0, 2, 0, 1, 0, -15), (0, 1, 0, 0, 0, 4, -17),
          (1, 0, 0, 1, 0, 2, -16)), 15),
    17: (((0, 0, 0, 0, 0, 5, -18), (0, 0, 1, 1, 0, 1, -16),
          (1, 1, 0, 0, 0, 3, -17)), 16),
    18: (((0, 0, 0, 2, 0, 0, -16), (0, 1, 1, 0, 0, 2, -17),
          (1, 0, 0, 0, 0, 4, -18)), 16),
    19: (((0, 0, 1, 0, 0, 3, -18), (0, 1, 0, 1, 0, 1, -17)), 17),
    20: (((0, 0, 0, 1, 0, 2, -18), (0, 2, 0, 0, 1, 0, -17)), 17),
    21: (((0, 1, 0, 0, 1, 1, -18), (0, 3, 0, 0, 0, 0, -17)), 17),
    22: (((0, 0, 0, 0, 2, 0, -18), (0, 2, 0, 0, 0, 1, -18)), 18),
    23: (((0, 1, 0, 0, 1, 0, -18),), 18),
    24: (((0, 0, 0, 1, 0, 0, -18),), 18),
    25: (((0, 0, 1, 0, 0, 0, -18),), 18),
    26: (((1, 0, 0, 0, 0, 0, -18),), 18),
}

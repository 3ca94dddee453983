"""Table 1 as printed: mu_S([x0, 0, x2]) for q = 11, d = 5.

Row ``j`` holds ``x0 = j`` for ``x2 = 0..10``; rows run consecutively
from ``x0 = 0`` to ``x0 = 52`` (the last two rows are unlabeled in print).
"""

PRINTED_Q = 11
PRINTED_D = 5

PRINTED_ROWS: tuple[tuple[int, ...], ...] = (
    ( 1, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    (-1,  2, -1,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0, -1,  2, -1,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0, -1,  2, -1,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0, -1,  2, -1,  0,  0,  0,  0,  0),
    ( 0,  0,  0,  0, -1,  2, -1,  0,  0,  0,  0),
    ( 0,  0,  0,  0,  0, -1,  2, -1,  0,  0,  0),
    ( 0,  0,  0,  0,  0,  0, -1,  2, -1,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0, -1,  2, -1,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0, -1,  2, -1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  2),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 1, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    (-1,  2, -1,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0, -1,  2, -1,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0, -1,  2, -1,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0, -1,  2, -1,  0,  0,  0,  0,  0),
    ( 0,  0,  0,  0, -1,  2, -1,  0,  0,  0,  0),
    ( 0,  0,  0,  0,  0, -1,  2, -1,  0,  0,  0),
    ( 0,  0,  0,  0,  0,  0, -1,  2, -1,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0, -1,  2, -1,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0, -1,  2, -1),
    (-1,  0,  0,  0,  0,  0,  0,  0,  0, -1,  2),
    ( 2, -1,  0,  0,  0,  0,  0,  0,  0,  0, -1),
    (-1,  2, -1,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0, -1,  2, -1,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0, -1,  2, -1,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0, -1,  2, -1,  0,  0,  0,  0,  0),
    ( 1, -1,  0,  0, -1,  2, -1,  0,  0,  0,  0),
    (-1,  2, -1,  0,  0, -1,  2, -1,  0,  0,  0),
    ( 0, -1,  2, -1,  0,  0, -1,  2, -1,  0,  0),
    ( 0,  0, -1,  2, -1,  0,  0, -1,  2, -1,  0),
    ( 0,  0,  0, -1,  2, -1,  0,  0, -1,  2, -1),
    ( 0,  0,  0,  0, -1,  2, -1,  0,  0, -1,  2),
    ( 0,  0,  0,  0,  0, -1,  2, -1,  0,  0, -1),
    ( 0,  0,  0,  0,  0,  0, -1,  2, -1,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0, -1,  2, -1,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0, -1,  2, -1),
    (-1,  0,  0,  0,  0,  0,  0,  0,  0, -1,  2),
    ( 2, -1,  0,  0,  0,  0,  0,  0,  0,  0, -1),
    (-1,  2, -1,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0, -1,  2, -1,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0, -1,  2, -1,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0, -1,  2, -1,  0,  0,  0,  0,  0),
    ( 1, -1,  0,  0, -1,  2, -1,  0,  0,  0,  0),
    (-1,  2, -1,  0,  0, -1,  2, -1,  0,  0,  0),
    ( 0, -1,  2, -1,  0,  0, -1,  2, -1,  0,  0),
    ( 0,  0, -1,  2, -1,  0,  0, -1,  2, -1,  0),
    ( 0,  0,  0, -1,  2, -1,  0,  0, -1,  2, -1),
)

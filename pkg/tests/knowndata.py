"""Shared worked-instance data used across the test modules.

Values here are pinned from hand-checked sources: either computed by an
independent method inside the tests, or read off published diagrams and
cross-verified against each other.
"""

from klreg import Ladder, Permutation

# The S_10 pair behind the reading-word / earliest-subword / degree-8 checks.
V10 = Permutation((4, 6, 1, 2, 8, 9, 3, 5, 10, 7))
W10 = Permutation((4, 1, 2, 3, 6, 8, 5, 9, 7, 10))
WORD_W10 = (3, 2, 1, 5, 7, 6, 8)
D_NE_10 = frozenset({(1, 1), (1, 2), (1, 3), (2, 5), (5, 5), (5, 7), (6, 7)})
REGION10 = ((1, 3), (1, 4), (3, 5), (3, 5), (5, 5))
D_TOP_10 = frozenset({(1, 1), (1, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 5)})
DEGREE10 = 8

# The S_11 headline pair: regularity 4, a-invariant -10, 16 saturated cells.
V11 = Permutation((5, 8, 9, 10, 1, 2, 11, 3, 4, 6, 7))
W11 = Permutation((1, 4, 5, 8, 2, 3, 9, 6, 10, 11, 7))

# The S_16 pair with two components and room sums 5 and 8.
V16 = Permutation((6, 11, 12, 13, 14, 15, 1, 16, 2, 3, 4, 5, 7, 8, 9, 10))
W16 = Permutation((1, 6, 2, 3, 7, 8, 11, 12, 4, 5, 9, 10, 13, 14, 15, 16))
C2_16 = ((2, 8), (2, 9), (3, 8), (3, 9))
MAX_DIAG_16_C1 = ((1, 2), (4, 4), (5, 5))
MIN_DIAG_16_C1 = ((1, 2), (2, 4), (3, 5))
DIAG_16_C2 = ((2, 8), (3, 9))
ROOMS_16 = {(1, 2): 1, (2, 4): 2, (3, 5): 2, (2, 8): 4, (3, 9): 4}
D_ZIP_16 = frozenset(
    {
        (1, 2), (1, 3), (1, 4), (1, 5),
        (2, 4), (2, 5), (2, 8), (2, 9),
        (3, 5), (3, 9),
        (5, 2), (6, 2), (6, 3), (7, 2), (7, 3), (7, 4),
    }
)
DEGREE16 = 29

# The two-sided board whose ideal has 3-minors over rows [4], 2-minors over
# columns {3,4,5} and {4,5}.
LAD_A = Ladder((5, 5, 5, 5, 2, 2), (2, 1, 0, 0, 0, 0), (((4, 0), 3), ((4, 2), 2), ((6, 3), 2)))
V_LAD_A = Permutation((4, 6, 8, 9, 1, 2, 3, 10, 11, 5, 7))
# The minimal-length solution of the nine rank constraints (cross-checked
# against the generator-set equality and the lattice-path statistics).
W_LAD_A = Permutation((1, 2, 4, 6, 3, 8, 5, 9, 10, 7, 11))
D_TOP_LAD_A = frozenset({(1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 5)})

# The large board with four paths, weight 40 and regularity 7.
LAD_B = Ladder(
    (10, 10, 10, 10, 8, 4, 4, 4, 2, 2),
    (2, 2, 0, 0, 0, 0, 0, 0, 0, 0),
    (((4, 0), 3), ((5, 2), 4), ((5, 6), 3), ((8, 6), 4), ((10, 8), 2)),
)
H_LAD_B = ((10.0, 9.5), (8.0, 7.5), (8.0, 6.5), (5.0, 5.5))
V_LAD_B = ((0.5, 0.0), (1.5, 0.0), (5.5, 6.0), (4.5, 2.0))
CORNER_FILLS_B = (((4, 2), 3), ((8, 8), 2))

# Hand-traced box routes (H_i to V_i) for the bottom family of LAD_B.
ROUTES_BOT_B = (
    (
        (10, 10), (10, 9), (9, 9), (8, 9), (7, 9), (6, 9), (5, 9), (4, 9),
        (4, 8), (3, 8), (3, 7), (3, 6), (3, 5), (3, 4), (3, 3), (3, 2),
        (2, 2), (1, 2), (1, 1),
    ),
    (
        (8, 8), (7, 8), (6, 8), (5, 8), (5, 7), (4, 7), (4, 6), (4, 5),
        (4, 4), (4, 3), (4, 2), (4, 1), (3, 1), (2, 1),
    ),
    ((8, 7), (7, 7), (6, 7)),
    ((5, 6), (5, 5), (5, 4), (5, 3)),
)

# A second valid family: the first path swings along the east edge.
ROUTES_MID_B = (
    (
        (10, 10), (9, 10), (8, 10), (7, 10), (6, 10), (5, 10), (4, 10), (3, 10),
        (3, 9), (3, 8), (2, 8), (1, 8), (1, 7), (1, 6), (1, 5), (1, 4),
        (1, 3), (1, 2), (1, 1),
    ),
    (
        (8, 8), (7, 8), (6, 8), (5, 8), (5, 7), (4, 7), (3, 7), (3, 6),
        (3, 5), (3, 4), (3, 3), (3, 2), (3, 1), (2, 1),
    ),
    ((8, 7), (7, 7), (6, 7)),
    ((5, 6), (5, 5), (5, 4), (5, 3)),
)

# An invalid family: the first path cuts through the cutout above a blank.
ROUTES_BAD_B = (
    (
        (10, 10), (9, 10), (8, 10), (7, 10), (6, 10), (5, 10), (4, 10), (3, 10),
        (2, 10), (2, 9), (2, 8), (1, 8), (1, 7), (1, 6), (1, 5), (1, 4),
        (1, 3), (1, 2), (1, 1),
    ),
    ROUTES_BOT_B[1],
    ROUTES_BOT_B[2],
    ROUTES_BOT_B[3],
)

# Small two-sided boards for bijection and generator-set checks.
LAD_C = Ladder((3, 3, 3, 2), (1, 0, 0, 0), (((3, 0), 2), ((4, 1), 2)))
LAD_D = Ladder((4, 4, 2, 2), (2, 1, 0, 0), (((2, 0), 1), ((4, 2), 2)))

# A board whose generators are all the variables: everything is covered.
LAD_FULL = Ladder((2, 2), (0, 0), (((2, 0), 1),))
# A board whose marked minors are vacuous: no blanks at all.
LAD_EMPTYW = Ladder((2, 2), (0, 0), (((2, 0), 3),))

"""Named matrices used throughout the tests and shipped as .mat fixtures."""

from .core import ExactMatrix

# 6x4 totally equimodular matrix without full row rank; its four te-laces
# are rows {1,2,3,4}, {3,4,5,6}, {1,3,5}, {2,3,6} (1-indexed) and pairwise
# intersect, so no brick decomposition applies.
FIGURE_RANK_DEFICIENT = ExactMatrix(
    [
        [1, 1, 0, 0],
        [1, 0, 1, 0],
        [1, 0, 0, 1],
        [1, 1, 1, 1],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
    ]
)

# The two known full-dimensional thick te-interlaces (up to resigning and
# permutations); conjecturally the only ones.
THICK_4 = ExactMatrix(
    [
        [1, 1, 1, 1],
        [1, -1, -1, 1],
        [1, -1, 1, -1],
        [1, 1, -1, -1],
    ]
)

THICK_6 = ExactMatrix(
    [
        [1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, -1, -1],
        [1, 1, 1, -1, -1, 1],
        [1, 1, -1, -1, 1, 1],
        [1, -1, -1, 1, 1, 1],
        [1, -1, 1, 1, 1, -1],
    ]
)

# Row-resigned copies flip the Hilbert case of the thick bricks: THICK_4 is
# the quarter-sum kind and THICK_4_CASE_B the skewed kind; THICK_6 is the
# skewed kind and THICK_6_CASE_A the quarter-sum kind.
THICK_4_CASE_B = ExactMatrix(
    [[-x for x in THICK_4.row(0)]] + [list(THICK_4.row(i)) for i in range(1, 4)]
)

THICK_6_CASE_A = ExactMatrix(
    [[-x for x in THICK_6.row(0)]] + [list(THICK_6.row(i)) for i in range(1, 6)]
)

# The unique 2x2 minimally non-TU matrix up to resigning, and the smallest
# 0,1 one (the odd-cycle incidence pattern).
MIN_NON_TU_2 = ExactMatrix([[1, 1], [-1, 1]])

MIN_NON_TU_3 = ExactMatrix([[1, 1, 0], [1, 0, 1], [0, 1, 1]])

NAMED = {
    "figure-rank-deficient": FIGURE_RANK_DEFICIENT,
    "thick-4": THICK_4,
    "thick-6": THICK_6,
    "thick-4-case-b": THICK_4_CASE_B,
    "thick-6-case-a": THICK_6_CASE_A,
    "min-non-tu-2": MIN_NON_TU_2,
    "min-non-tu-3": MIN_NON_TU_3,
}

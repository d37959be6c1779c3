"""The full n=3, m=4 standard bijection table, transcribed as printed.

Each entry maps a one-line permutation of 1..4 to the pair of tableaux
produced by inserting its permutation matrix, written as rows from the
bottom (row 1 first).  Strong tableau cells are "k" or "k*" (star on the
marked ribbon head); weak tableau cells are bare letters.
"""

STANDARD_TABLE = {
    "1234": (
        [["1*", "2*", "3*", "4*"], ["3", "4"]],
        [[1, 2, 3, 4], [3, 4]],
    ),
    "1243": (
        [["1*", "2*", "3*", "4"], ["3", "4*"]],
        [[1, 2, 3, 4], [3, 4]],
    ),
    "1324": (
        [["1*", "2*", "3", "4*"], ["3*", "4"]],
        [[1, 2, 3, 4], [3, 4]],
    ),
    "1342": (
        [["1*", "2*", "3", "4"], ["3*", "4*"]],
        [[1, 2, 3, 4], [3, 4]],
    ),
    "1423": (
        [["1*", "2*", "3*"], ["3"], ["4*"]],
        [[1, 2, 3], [3], [4]],
    ),
    "1432": (
        [["1*", "2*", "3"], ["3*"], ["4*"]],
        [[1, 2, 3], [3], [4]],
    ),
    "2134": (
        [["1*", "3*", "4*"], ["2*"], ["3"]],
        [[1, 3, 4], [2], [3]],
    ),
    "2143": (
        [["1*", "3*"], ["2*", "4*"], ["3"], ["4"]],
        [[1, 3], [2, 4], [3], [4]],
    ),
    "2314": (
        [["1*", "3", "3*", "4*"], ["2*", "4"]],
        [[1, 2, 3, 4], [3, 4]],
    ),
    "2341": (
        [["1*", "3", "3*", "4"], ["2*", "4*"]],
        [[1, 2, 3, 4], [3, 4]],
    ),
    "2413": (
        [["1*", "3*", "4*"], ["2*"], ["3"]],
        [[1, 2, 3], [3], [4]],
    ),
    "2431": (
        [["1*", "3", "3*"], ["2*"], ["4*"]],
        [[1, 2, 3], [3], [4]],
    ),
    "3124": (
        [["1*", "2*", "4*"], ["3*"], ["3"]],
        [[1, 3, 4], [2], [3]],
    ),
    "3142": (
        [["1*", "2*"], ["3*", "4*"], ["3"], ["4"]],
        [[1, 3], [2, 4], [3], [4]],
    ),
    "3214": (
        [["1*", "3", "4*"], ["2*"], ["3*"]],
        [[1, 3, 4], [2], [3]],
    ),
    "3241": (
        [["1*", "3"], ["2*", "4*"], ["3*"], ["4"]],
        [[1, 3], [2, 4], [3], [4]],
    ),
    "3412": (
        [["1*", "2*", "4*"], ["3*"], ["3"]],
        [[1, 2, 3], [3], [4]],
    ),
    "3421": (
        [["1*", "3", "4*"], ["2*"], ["3*"]],
        [[1, 2, 3], [3], [4]],
    ),
    "4123": (
        [["1*", "2*", "3*"], ["3"], ["4*"]],
        [[1, 3, 4], [2], [3]],
    ),
    "4132": (
        [["1*", "2*", "3"], ["3*"], ["4*"]],
        [[1, 3, 4], [2], [3]],
    ),
    "4213": (
        [["1*", "3*"], ["2*", "4"], ["3"], ["4*"]],
        [[1, 3], [2, 4], [3], [4]],
    ),
    "4231": (
        [["1*", "3", "3*"], ["2*"], ["4*"]],
        [[1, 3, 4], [2], [3]],
    ),
    "4312": (
        [["1*", "2*"], ["3*", "4"], ["3"], ["4*"]],
        [[1, 3], [2, 4], [3], [4]],
    ),
    "4321": (
        [["1*", "3"], ["2*", "4"], ["3*"], ["4*"]],
        [[1, 3], [2, 4], [3], [4]],
    ),
}

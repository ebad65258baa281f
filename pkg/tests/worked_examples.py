"""Worked examples with symbolic entries, as functions of the parameters.

Indices in the dictionaries are 0-based.
"""


def four_vertex_exchange(al, a, b, c, d):
    return [[0, al], [-al, 0], [a, b], [c, d]]


def four_vertex_minor_block(al, a, b, c, d):
    return [
        [0, -a * d + b * c, -al * d, al * b],
        [a * d - b * c, 0, al * c, -al * a],
        [al * d, -al * c, 0, -al ** 2],
        [-al * b, al * a, al ** 2, 0],
    ]


def five_vertex_exchange(al, a, b, c):
    return [[0, al], [-al, 0], [a, 0], [b, 0], [0, c]]


def five_vertex_enhanced(al, a, b, c):
    """Enhanced solution matrices keyed by 0-based (i, j)."""
    return {
        (2, 3): [
            [0, 0, 0, 0, 0],
            [0, 0, al * b, -al * a, 0],
            [0, -al * b, 0, -al ** 2, 0],
            [0, al * a, al ** 2, 0, 0],
            [0, 0, 0, 0, 0],
        ],
        (2, 4): [
            [0, -a * c, -al * c, 0, 0],
            [a * c, 0, 0, 0, -al * a],
            [al * c, 0, 0, 0, -al ** 2],
            [0, 0, 0, 0, 0],
            [0, al * a, al ** 2, 0, 0],
        ],
        (3, 4): [
            [0, -b * c, 0, -al * c, 0],
            [b * c, 0, 0, 0, -al * b],
            [0, 0, 0, 0, 0],
            [al * c, 0, 0, 0, -al ** 2],
            [0, al * b, 0, al ** 2, 0],
        ],
    }

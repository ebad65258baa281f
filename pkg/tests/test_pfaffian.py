import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterquant import (
    Matrix,
    det_exact,
    dynkin_exchange,
    dynkin_orientations,
    pairings,
    perfect_matchings,
    pfaffian,
    pfaffian_via_matchings,
    rank_exact,
    skew_form,
)
from clusterquant.sampling import random_skew


@st.composite
def skew_matrices(draw, max_n=8, bound=9):
    n = draw(st.integers(0, max_n))
    upper = draw(st.lists(st.integers(-bound, bound), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    b = [[0] * n for _ in range(n)]
    it = iter(upper)
    for i in range(n):
        for j in range(i + 1, n):
            v = next(it)
            b[i][j], b[j][i] = v, -v
    return Matrix(b, ncols=n)


def test_pfaffian_generic_4x4_formula():
    b = Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    assert pfaffian(b) == 1
    # b12 b34 - b13 b24 + b14 b23 at distinct values
    vals = {(0, 1): 2, (0, 2): 3, (0, 3): 5, (1, 2): 7, (1, 3): 11, (2, 3): 13}
    g = [[0] * 4 for _ in range(4)]
    for (i, j), v in vals.items():
        g[i][j], g[j][i] = v, -v
    assert pfaffian(g) == 2 * 13 - 3 * 11 + 5 * 7


def test_pfaffian_small_cases():
    assert pfaffian([[0, 5], [-5, 0]]) == 5
    assert pfaffian(Matrix.zeros(0, 0)) == 1
    assert pfaffian(Matrix.zeros(3, 3)) == 0
    assert pfaffian_via_matchings(Matrix.zeros(3, 3)) == 0
    assert pfaffian_via_matchings(Matrix.zeros(4, 4)) == 0


def test_pfaffian_frozen_6x6():
    s = [[0, 1, -5, 3, -8, -7], [-1, 0, 8, -6, 2, 9], [5, -8, 0, -8, 7, -3],
         [-3, 6, 8, 0, -8, -7], [8, -2, -7, 8, 0, 4], [7, -9, 3, 7, -4, 0]]
    # det computed independently with sympy: 937024 = 968^2
    assert det_exact(s) == 937024
    pf = pfaffian(s)
    assert abs(pf) == 968
    assert pf == pfaffian_via_matchings(s)


def test_pfaffian_rejects_non_skew():
    with pytest.raises(ValueError):
        pfaffian([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        pfaffian_via_matchings([[1, 0], [0, 0]])


@settings(max_examples=80, deadline=None)
@given(skew_matrices())
def test_pfaffian_squares_to_determinant(b):
    pf = pfaffian(b)
    assert pf * pf == det_exact(b)
    assert pf == pfaffian_via_matchings(b)


def test_pairing_count():
    for n, count in [(0, 1), (2, 1), (4, 3), (6, 15), (8, 105)]:
        assert len(pairings(n)) == count
    assert pairings(5) == []


def test_perfect_matchings_examples():
    a4 = dynkin_exchange("A", 4).data
    assert perfect_matchings(a4) == [((0, 1), (2, 3))]
    assert perfect_matchings(dynkin_exchange("D", 4).data) == []
    full = Matrix([[0, 1, 1, 1], [-1, 0, 1, 1], [-1, -1, 0, 1], [-1, -1, -1, 0]])
    assert len(perfect_matchings(full)) == 3
    assert perfect_matchings(Matrix.zeros(3, 3)) == []


def test_nonvanishing_pfaffian_needs_matching():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.choice((2, 4, 6))
        b = random_skew(n, bound=1, rng=rng)
        if not perfect_matchings(b):
            assert pfaffian(b) == 0


def test_dynkin_constructors():
    assert dynkin_exchange("A", 2).data == Matrix([[0, 1], [-1, 0]])
    a4 = dynkin_exchange("A", 4).data
    assert abs(pfaffian(a4)) == 1 and det_exact(a4) == 1 and rank_exact(a4) == 4
    for bt in dynkin_orientations("D", 4):
        assert det_exact(bt.data) == 0
    with pytest.raises(ValueError):
        dynkin_exchange("D", 3)
    with pytest.raises(ValueError):
        dynkin_exchange("E", 9)


def test_dynkin_alternating_orientation_is_bipartite():
    b = dynkin_exchange("E", 8, "alternating").data
    for i in range(8):
        signs = {b[i, j] for j in range(8) if b[i, j]}
        assert len(signs) == 1


def test_skew_form_of_skew_symmetrisable():
    b = Matrix([[0, 1], [-2, 0]])
    db = skew_form(b)
    assert db.is_skew_symmetric()
    assert pfaffian(db) ** 2 == det_exact(db)
    assert rank_exact(db) == rank_exact(b)


def test_odd_size_determinant_vanishes():
    rng = random.Random(9)
    for n in (1, 3, 5, 7):
        assert det_exact(random_skew(n, rng=rng)) == 0

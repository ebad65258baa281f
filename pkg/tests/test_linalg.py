import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterquant import (
    DimensionError,
    Matrix,
    SingularMatrixError,
    clear_denominators,
    det_exact,
    invert_exact,
    nullspace_exact,
    rank_exact,
)

from oracles import cofactor_det, sympy_rank


def int_matrices(max_rows=5, max_cols=5, bound=9, square=False):
    def build(shape):
        r, c = shape
        return st.lists(
            st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r
        ).map(lambda rows: Matrix(rows, ncols=c))

    if square:
        shapes = st.integers(1, max_rows).map(lambda n: (n, n))
    else:
        shapes = st.tuples(st.integers(1, max_rows), st.integers(1, max_cols))
    return shapes.flatmap(build)


def test_matrix_rejects_floats():
    with pytest.raises(TypeError):
        Matrix([[0.5]])


def test_matrix_normalises_integral_fractions():
    m = Matrix([[Fraction(4, 2), Fraction(1, 3)]])
    assert m[0, 0] == 2 and isinstance(m[0, 0], int)
    assert m[0, 1] == Fraction(1, 3)


def test_from_flat_checks_length():
    assert Matrix.from_flat(2, 2, [1, 2, 3, 4]) == Matrix([[1, 2], [3, 4]])
    with pytest.raises(DimensionError):
        Matrix.from_flat(2, 2, [1, 2, 3])


def test_det_identity_and_skew_block():
    assert det_exact(Matrix.identity(3)) == 1
    assert det_exact([[0, 1], [-1, 0]]) == 1


def test_det_frozen_5x5():
    # expected value from cofactor expansion (oracles.cofactor_det)
    a = [[6, -4, 9, 0, -3], [4, -1, 8, -2, 6], [2, 4, 7, -3, 0], [8, 1, 7, -7, -3], [5, -5, 8, -3, 4]]
    assert cofactor_det(a) == -8097
    assert det_exact(a) == -8097


def test_det_random_against_cofactor():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 6)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert det_exact(a) == cofactor_det(a)


def test_det_non_square():
    with pytest.raises(DimensionError):
        det_exact([[1, 2, 3]])


def test_det_rational_entries():
    a = Matrix([[Fraction(1, 2), 1], [Fraction(1, 3), 2]])
    assert det_exact(a) == Fraction(2, 3)


@settings(max_examples=60, deadline=None)
@given(int_matrices(square=True))
def test_det_transpose_invariant(a):
    assert det_exact(a) == det_exact(a.T)


def test_rank_examples():
    assert rank_exact(Matrix.zeros(4, 2)) == 0
    assert rank_exact([[0, 1], [-1, 0], [2, 3], [4, 5]]) == 2
    d4 = [[0, 1, 0, 0], [-1, 0, 1, 1], [0, -1, 0, 0], [0, -1, 0, 0]]
    assert rank_exact(d4) == 2


@settings(max_examples=80, deadline=None)
@given(int_matrices(max_rows=6, max_cols=6, bound=3))
def test_rank_matches_oracle_and_transpose(a):
    assert rank_exact(a) == sympy_rank(a.tolist()) == rank_exact(a.T)


@settings(max_examples=40, deadline=None)
@given(int_matrices(max_rows=5, max_cols=5, bound=4), st.data())
def test_rank_invariant_under_diagonal_scaling(a, data):
    diag = data.draw(st.lists(st.integers(1, 5), min_size=a.rows, max_size=a.rows))
    assert rank_exact(Matrix.diagonal(diag) @ a) == rank_exact(a)


def test_inverse_examples():
    assert invert_exact(Matrix.identity(3)) == Matrix.identity(3)
    m = Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1]])
    expected = Matrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 1, 1, 0], [-1, 0, 0, 1]])
    assert invert_exact(m) == expected
    assert m @ expected == Matrix.identity(4)


def test_inverse_random_6x6():
    rng = random.Random(5)
    done = 0
    while done < 10:
        m = Matrix([[rng.randint(-5, 5) for _ in range(6)] for _ in range(6)])
        if det_exact(m) == 0:
            continue
        inv = invert_exact(m)
        assert m @ inv == Matrix.identity(6)
        assert inv @ m == Matrix.identity(6)
        done += 1


def test_inverse_singular_reports_rank():
    with pytest.raises(SingularMatrixError) as info:
        invert_exact([[1, 2], [2, 4]])
    assert info.value.rank == 1


def test_clear_denominators_examples():
    assert clear_denominators(Matrix([[Fraction(1, 2), Fraction(1, 3)]])) == (Matrix([[3, 2]]), 6)
    ints = Matrix([[1, -2], [3, 4]])
    assert clear_denominators(ints) == (ints, 1)
    assert clear_denominators(Matrix([[Fraction(2, 4), Fraction(5, 6)]])) == (Matrix([[3, 5]]), 6)


def _prime_factors(k):
    out, p = set(), 2
    while p * p <= k:
        while k % p == 0:
            out.add(p)
            k //= p
        p += 1
    if k > 1:
        out.add(k)
    return out


@settings(max_examples=60, deadline=None)
@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=30), min_size=1, max_size=8))
def test_clear_denominators_minimal(values):
    a = Matrix([values])
    ints, scale = clear_denominators(a)
    assert ints.is_integral() and ints == a * scale
    for p in _prime_factors(int(scale)):
        assert not (a * (scale / p)).is_integral()


@settings(max_examples=40, deadline=None)
@given(int_matrices(max_rows=5, max_cols=6, bound=3))
def test_nullspace(a):
    basis = nullspace_exact(a)
    assert len(basis) == a.cols - sympy_rank(a.tolist())
    for v in basis:
        assert a @ Matrix([[x] for x in v]) == Matrix.zeros(a.rows, 1)

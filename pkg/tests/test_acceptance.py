"""Acceptance criteria 1-8.

Each test registers a label with the ``criterion`` fixture; the terminal
summary prints one PASS/FAIL line per criterion.  Run directly with
``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction
from math import comb

import pytest

from clusterquant import (
    LaurentQ,
    Matrix,
    NoQuantisationError,
    QuantumTorus,
    build_quantisation,
    check_compatible,
    check_q_commute,
    det_exact,
    dynkin_exchange,
    dynkin_orientations,
    general_solution,
    homogeneous_basis,
    initial_seed,
    minor_block,
    mutate_lambda,
    mutate_matrix,
    mutate_seed,
    normal_order,
    pfaffian,
    pfaffian_via_matchings,
    rank_exact,
)
from clusterquant.sampling import (
    random_compatible_pair,
    random_full_rank_exchange,
    random_integer_matrix,
    random_rank_deficient_exchange,
    random_skew,
)

from oracles import flatten_rank, skew_solution_dimension, sympy_rank
from worked_examples import (
    five_vertex_enhanced,
    five_vertex_exchange,
    four_vertex_exchange,
    four_vertex_minor_block,
)


def test_pfaffian_correctness(criterion):
    criterion("1  Pfaffian^2 = det and matching expansion agree on 200 skew matrices")
    rng = random.Random(101)
    start = time.perf_counter()
    for t in range(200):
        n = (2, 4, 6, 8)[t % 4]
        b = random_skew(n, bound=9, rng=rng)
        pf = pfaffian(b)
        assert pf * pf == det_exact(b)
        assert pf == pfaffian_via_matchings(b)
    assert time.perf_counter() - start < 5


def test_dynkin_case_analysis(criterion):
    criterion("2  Dynkin types: |Pf| = 1 for A2 A4 A6 E6 E8, Pf = det = 0 for D4-D6 and odd sizes")
    for kind, n in [("A", 2), ("A", 4), ("A", 6), ("E", 6), ("E", 8)]:
        for bt in dynkin_orientations(kind, n):
            assert abs(pfaffian(bt.data)) == 1
            assert abs(det_exact(bt.data)) == 1
    singular = [("D", 4), ("D", 5), ("D", 6), ("A", 3), ("A", 5), ("A", 7), ("E", 7)]
    for kind, n in singular:
        for bt in dynkin_orientations(kind, n):
            assert pfaffian(bt.data) == 0
            assert det_exact(bt.data) == 0


def test_quantisation_round_trip(criterion):
    criterion("3  100 full-rank exchange matrices quantise with Bt^T Lambda = [D' 0]; rank-deficient ones fail")
    rng = random.Random(303)
    for _ in range(100):
        m = rng.randint(1, 8)
        n = rng.randint(1, m)
        if m == n and n % 2:
            n -= 1
            if n == 0:
                m, n = 2, 1
        bt = random_full_rank_exchange(m, n, bound=4, rng=rng)
        assert sympy_rank(bt.data.tolist()) == n
        pair = build_quantisation(bt)
        lam = pair.lambda_
        assert lam.is_integral() and lam.is_skew_symmetric()
        prod = bt.data.T @ lam
        expected = pair.dprime.matrix().hstack(Matrix.zeros(n, m - n)) if m > n else pair.dprime.matrix()
        assert prod == expected
        d = bt.skew_symmetriser()
        ratios = {Fraction(x, y) for x, y in zip(pair.dprime, d)}
        assert len(ratios) == 1 and ratios.pop() > 0
    for _ in range(40):
        n = rng.randint(2, 6)
        m = rng.randint(n, 8)
        bt = random_rank_deficient_exchange(m, n, bound=4, rng=rng)
        assert sympy_rank(bt.data.tolist()) < n
        with pytest.raises(NoQuantisationError):
            build_quantisation(bt)


@pytest.mark.parametrize("params", [(1, 2, 3, 4, 5), (2, 1, 1, 3, 5)])
def test_worked_examples(criterion, params):
    criterion(f"4  worked minor and enhanced matrices at (alpha,a,b,c,d) = {params}")
    assert minor_block(four_vertex_exchange(*params)) == Matrix(four_vertex_minor_block(*params))
    al, a, b, c, _ = params
    expected = five_vertex_enhanced(al, a, b, c)
    sols = homogeneous_basis(five_vertex_exchange(al, a, b, c))
    assert {(s.i, s.j) for s in sols} == set(expected)
    for s in sols:
        assert s.matrix == Matrix(expected[(s.i, s.j)])


def test_enhanced_solutions_form_a_basis(criterion):
    criterion("5  C(m-n,2) enhanced solutions are independent and span on 100 random full-rank A")
    rng = random.Random(505)
    for _ in range(100):
        gap = rng.choice((2, 3, 4))
        m = rng.randint(gap + 1, 9)
        n = m - gap
        a = random_integer_matrix(m, n, bound=4, rng=rng)
        sols = homogeneous_basis(a)
        assert len(sols) == comb(gap, 2)
        for s in sols:
            assert s.matrix.is_skew_symmetric()
            assert (a.T @ s.matrix).is_zero()
        assert flatten_rank([s.matrix.tolist() for s in sols]) == len(sols)
        assert skew_solution_dimension(a.tolist()) == len(sols)


def test_quantum_seed_mutation(criterion):
    criterion("6  seed mutation on 50 compatible pairs: compatibility, involution, q-commutation")
    rng = random.Random(606)
    for _ in range(50):
        pair = random_compatible_pair(max_m=6, bound=3, rng=rng)
        seed = initial_seed(pair)
        for k in range(pair.n):
            new_lam = mutate_lambda(pair.lambda_, pair.exchange, k)
            new_bt = mutate_matrix(pair.exchange, k)
            assert new_lam.is_skew_symmetric()
            assert check_compatible(new_bt, new_lam).dprime == pair.dprime
            once = mutate_seed(seed, k)
            assert once.exchange == new_bt and once.lambda_ == new_lam
            assert mutate_seed(once, k) == seed
            xk = once.cluster[k]
            for j in range(pair.m):
                if j != k:
                    assert check_q_commute(xk, once.cluster[j], new_lam[k, j])


def test_quantum_torus_engine(criterion):
    criterion("7  torus associativity, inverses, q-commutation and normal ordering on 100 vectors")
    rng = random.Random(707)
    for _ in range(100):
        m = rng.randint(1, 5)
        t = QuantumTorus(random_skew(m, bound=4, rng=rng))
        a, b, c = ([rng.randint(-3, 3) for _ in range(m)] for _ in range(3))
        xa, xb, xc = t.monomial(a), t.monomial(b), t.monomial(c)
        assert (xa * xb) * xc == xa * (xb * xc)
        assert xa * t.monomial([-v for v in a]) == t.one()
        assert xa * xb == (xb * xa).scale(LaurentQ.q(2 * t.beta(a, b)))
        ordered = t.one()
        for i, ai in enumerate(a):
            ordered = ordered * t.gen(i) ** ai
        assert xa == ordered.scale(LaurentQ.q(normal_order(a, t.lambda_)))


def test_general_solution(criterion):
    criterion("8  general solutions with 20 random coefficient vectors stay compatible with the same D'")
    rng = random.Random(808)
    for _ in range(25):
        m = rng.randint(3, 8)
        n = rng.randint(1, m - 2)
        bt = random_full_rank_exchange(m, n, bound=4, rng=rng)
        base = build_quantisation(bt)
        k = comb(m - n, 2)
        for _ in range(20):
            coeffs = [rng.randint(-5, 5) for _ in range(k)]
            pair = general_solution(bt, coeffs)
            assert check_compatible(bt, pair.lambda_).dprime == base.dprime


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))

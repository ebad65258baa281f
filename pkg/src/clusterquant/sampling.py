"""Random instances for property checks and the ``selftest`` command."""

import random

from .exchange import ExchangeMatrix
from .linalg import Matrix, rank_exact
from .quantizer import build_quantisation


def _rng(rng):
    return rng if isinstance(rng, random.Random) else random.Random(rng)


def random_skew(n, bound=9, rng=None):
    """Uniform skew-symmetric integer matrix with entries in ``[-bound, bound]``."""
    rng = _rng(rng)
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-bound, bound)
            b[i][j] = v
            b[j][i] = -v
    return Matrix(b, ncols=n)


def random_principal(n, bound=4, rng=None):
    """Skew-symmetrisable ``n x n`` matrix ``S C`` (``S`` skew, ``C`` positive diagonal).

    Entries stay within ``[-bound, bound]``.
    """
    rng = _rng(rng)
    scale = [rng.choice((1, 1, 2)) for _ in range(n)]
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            limit = bound // max(scale[i], scale[j])
            s = rng.randint(-limit, limit)
            b[i][j] = s * scale[j]
            b[j][i] = -s * scale[i]
    return Matrix(b, ncols=n)


def random_exchange(m, n, bound=4, rng=None):
    rng = _rng(rng)
    principal = random_principal(n, bound, rng)
    frozen = Matrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m - n)], ncols=n)
    return ExchangeMatrix(principal.vstack(frozen))


def random_full_rank_exchange(m, n, bound=4, rng=None, tries=1000):
    rng = _rng(rng)
    for _ in range(tries):
        bt = random_exchange(m, n, bound, rng)
        if rank_exact(bt.data) == n:
            return bt
    raise RuntimeError(f"no full-rank {m}x{n} exchange matrix found")


def random_rank_deficient_exchange(m, n, bound=4, rng=None, tries=1000):
    """Exchange matrix of rank ``< n``.

    The principal part is resampled until singular; frozen rows are small
    integer combinations of its rows, so they add nothing to the rank.
    """
    rng = _rng(rng)
    for _ in range(tries):
        principal = random_principal(n, bound, rng)
        if rank_exact(principal) == n:
            continue
        frozen = []
        while len(frozen) < m - n:
            coeffs = [rng.randint(-1, 1) for _ in range(n)]
            row = [sum(c * principal[i, j] for i, c in enumerate(coeffs)) for j in range(n)]
            if all(abs(x) <= bound for x in row):
                frozen.append(row)
        return ExchangeMatrix(principal.vstack(Matrix(frozen, ncols=n)))
    raise RuntimeError(f"no rank-deficient {m}x{n} exchange matrix found")


def random_integer_matrix(m, n, bound=4, rng=None, full_rank=True, tries=1000):
    rng = _rng(rng)
    for _ in range(tries):
        a = Matrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)], ncols=n)
        if not full_rank or rank_exact(a) == n:
            return a
    raise RuntimeError("no full-rank matrix found")


def random_compatible_pair(max_m=6, bound=3, rng=None):
    """Full-rank exchange matrix with its constructed quantisation."""
    rng = _rng(rng)
    m = rng.randint(2, max_m)
    n = rng.randint(1, m)
    if n == m and n % 2:
        n -= 1
    if n == 0:
        n = 1
        m = max(m, 2)
    bt = random_full_rank_exchange(m, n, bound, rng)
    return build_quantisation(bt)

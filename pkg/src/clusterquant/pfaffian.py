"""Pfaffians, perfect matchings and Dynkin-type exchange matrices.

Two independent evaluations of the Pfaffian are provided: a memoised
expansion along the first row (:func:`pfaffian`) and the signed sum over all
pairings of ``range(n)`` (:func:`pfaffian_via_matchings`).  They share no
code and serve as cross-checks for one another.
"""

from functools import lru_cache
from itertools import product

from .errors import DimensionError
from .exchange import ExchangeMatrix, fundamental_skew_symmetriser
from .linalg import Matrix, rank_exact

__all__ = [
    "pfaffian",
    "pfaffian_via_matchings",
    "perfect_matchings",
    "pairings",
    "dynkin_edges",
    "dynkin_exchange",
    "dynkin_orientations",
    "skew_form",
    "full_rank_report",
]


def _skew(b):
    b = b if isinstance(b, Matrix) else Matrix(b)
    if not b.is_skew_symmetric():
        raise ValueError("matrix is not skew-symmetric")
    return b


def pfaffian(b):
    """Pfaffian of an integer skew-symmetric matrix.

    ``Pf`` of the empty matrix is 1 and of any odd-size matrix 0.
    """
    b = _skew(b)
    n = b.rows
    if n % 2:
        return 0
    entries = b.tolist()

    @lru_cache(maxsize=None)
    def pf(mask):
        if mask == 0:
            return 1
        first = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << first)
        total = 0
        sign = 1
        j = first + 1
        while j < n:
            if rest >> j & 1:
                a = entries[first][j]
                if a:
                    total += sign * a * pf(rest & ~(1 << j))
                sign = -sign
            j += 1
        return total

    return pf((1 << n) - 1)


def pairings(n):
    """Every partition of ``range(n)`` into 2-element blocks."""
    if n % 2:
        return []

    def rec(items):
        if not items:
            yield ()
            return
        a = items[0]
        for idx in range(1, len(items)):
            rest = items[1:idx] + items[idx + 1:]
            for tail in rec(rest):
                yield ((a, items[idx]),) + tail

    return list(rec(tuple(range(n))))


def _perm_sign(perm):
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def pfaffian_via_matchings(b):
    """Signed pairing sum: sign of ``(i1, j1, i2, j2, ...)`` times ``prod b[ik, jk]``."""
    b = _skew(b)
    n = b.rows
    if n % 2:
        return 0
    total = 0
    for pairing in pairings(n):
        term = 1
        for i, j in pairing:
            term *= b[i, j]
            if term == 0:
                break
        if term:
            total += _perm_sign([x for pair in pairing for x in pair]) * term
    return total


def perfect_matchings(b):
    """Perfect matchings of the support graph of ``b`` (edge iff ``b[i, j] != 0``).

    Each matching is a tuple of pairs ``(i, j)`` with ``i < j``.
    """
    b = b if isinstance(b, Matrix) else Matrix(b)
    n = b.rows
    if n % 2:
        return []
    out = []

    def rec(free, acc):
        if not free:
            out.append(tuple(acc))
            return
        a = free[0]
        for idx in range(1, len(free)):
            c = free[idx]
            if b[a, c] != 0 or b[c, a] != 0:
                rec(free[1:idx] + free[idx + 1:], acc + [(a, c)])

    rec(tuple(range(n)), [])
    return out


def skew_form(b):
    """``D b`` for the fundamental skew-symmetriser ``D`` of a square ``b``."""
    b = b if isinstance(b, Matrix) else Matrix(b)
    if not b.is_square:
        raise DimensionError("square matrix required")
    return fundamental_skew_symmetriser(b).matrix() @ b


def dynkin_edges(kind, n):
    """Edges of the Dynkin diagram, 0-based.

    ``A_n``: path.  ``D_n``: path on the first ``n-1`` vertices with the last
    vertex attached to vertex ``n-3``.  ``E_n`` (n = 6, 7, 8): path on the
    first ``n-1`` vertices with the last attached to vertex 2.
    """
    kind = kind.upper()
    if kind == "A" and n >= 1:
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "D" and n >= 4:
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if kind == "E" and n in (6, 7, 8):
        return [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    raise ValueError(f"no Dynkin diagram of type {kind}{n}")


def dynkin_exchange(kind, n, orientation="linear"):
    """Signed adjacency matrix of an orientation of a Dynkin diagram.

    ``orientation`` is ``"linear"`` (every edge from the smaller to the
    larger vertex), ``"alternating"`` (bipartite, sources at even distance
    from vertex 0), or a sequence of ``+1``/``-1`` per edge of
    :func:`dynkin_edges` (``+1`` keeps the smaller-to-larger direction).
    """
    edges = dynkin_edges(kind, n)
    if orientation == "linear":
        signs = [1] * len(edges)
    elif orientation == "alternating":
        depth = {0: 0}
        for _ in range(n):
            for i, j in edges:
                if i in depth and j not in depth:
                    depth[j] = depth[i] + 1
        signs = [1 if depth[i] % 2 == 0 else -1 for i, _ in edges]
    else:
        signs = list(orientation)
        if len(signs) != len(edges) or any(s not in (1, -1) for s in signs):
            raise ValueError(f"orientation needs {len(edges)} signs of +-1")
    b = [[0] * n for _ in range(n)]
    for (i, j), s in zip(edges, signs):
        b[i][j] = s
        b[j][i] = -s
    return ExchangeMatrix(Matrix(b, ncols=n))


def dynkin_orientations(kind, n):
    """Every orientation of the diagram as an exchange matrix."""
    edges = dynkin_edges(kind, n)
    for signs in product((1, -1), repeat=len(edges)):
        yield dynkin_exchange(kind, n, signs)


def full_rank_report(bt):
    """Rank data for a square exchange matrix: ``(rank, pfaffian or None)``.

    The Pfaffian is taken of ``D B`` (``D`` fundamental) so that
    skew-symmetrisable input is handled; it is ``None`` for odd size.
    """
    if not isinstance(bt, ExchangeMatrix):
        bt = ExchangeMatrix(bt)
    rank = rank_exact(bt.data)
    pf = None
    if bt.m == bt.n and bt.n % 2 == 0:
        pf = pfaffian(skew_form(bt.principal))
    return rank, pf

"""Exchange matrices, skew-symmetrisers and matrix mutation."""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

from .errors import DimensionError, NotSkewSymmetrisableError
from .linalg import Matrix

__all__ = [
    "ConnectivityGraph",
    "ExchangeMatrix",
    "SkewSymmetriser",
    "connectivity_graph",
    "fundamental_skew_symmetriser",
    "is_connected_principal",
    "mutate_matrix",
]


class ConnectivityGraph(NamedTuple):
    """Simple undirected graph on ``range(n)`` with edges ``(i, j)``, ``i < j``."""

    n: int
    edges: frozenset
    components: tuple

    def neighbours(self, v):
        return sorted({j for e in self.edges if v in e for j in e if j != v})


def _principal(b):
    if isinstance(b, ExchangeMatrix):
        return b.principal
    b = b if isinstance(b, Matrix) else Matrix(b)
    if not b.is_square:
        raise DimensionError(f"principal part must be square, got {b.shape}")
    return b


def connectivity_graph(b):
    """Graph with an edge ``{i, j}`` whenever ``b[i, j]`` is nonzero."""
    b = _principal(b)
    n = b.rows
    edges = frozenset(
        (min(i, j), max(i, j)) for i in range(n) for j in range(n) if i != j and b[i, j] != 0
    )
    adj = {v: [] for v in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = set()
    components = []
    for start in range(n):
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        components.append(tuple(sorted(comp)))
    return ConnectivityGraph(n, edges, tuple(components))


@dataclass(frozen=True)
class SkewSymmetriser:
    """Positive integer diagonal ``diag(d_1, ..., d_n)``."""

    diag: tuple

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(int(d) for d in self.diag))
        if any(d <= 0 for d in self.diag):
            raise ValueError(f"skew-symmetriser entries must be positive: {self.diag}")

    def __len__(self):
        return len(self.diag)

    def __iter__(self):
        return iter(self.diag)

    def matrix(self):
        return Matrix.diagonal(self.diag)

    def scaled(self, factor):
        vals = [Fraction(factor) * d for d in self.diag]
        if any(v.denominator != 1 for v in vals):
            raise ValueError(f"{factor} * {self.diag} is not integral")
        return SkewSymmetriser(int(v) for v in vals)

    def symmetrises(self, b):
        """True when ``D b`` is skew-symmetric."""
        b = _principal(b)
        n = b.rows
        if n != len(self.diag):
            return False
        d = self.diag
        return all(d[i] * b[i, j] == -d[j] * b[j, i] for i in range(n) for j in range(i, n))


def fundamental_skew_symmetriser(b):
    """Componentwise minimal skew-symmetriser of the principal part ``b``.

    Ratios ``d_i / d_j = -b_ji / b_ij`` are propagated along a BFS tree of
    each component of the connectivity graph, every edge is then rechecked,
    and each component is cleared to coprime positive integers.

    Raises :class:`NotSkewSymmetrisableError` naming the violated entry.
    """
    b = _principal(b)
    n = b.rows
    for i in range(n):
        if b[i, i] != 0:
            raise NotSkewSymmetrisableError("nonzero-diagonal", (i, i))
        for j in range(i + 1, n):
            if (b[i, j] == 0) != (b[j, i] == 0):
                raise NotSkewSymmetrisableError("zero-pattern", (i, j))
            if b[i, j] * b[j, i] > 0:
                raise NotSkewSymmetrisableError("sign", (i, j))

    graph = connectivity_graph(b)
    ratio = [None] * n
    for comp in graph.components:
        root = comp[0]
        ratio[root] = Fraction(1)
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in graph.neighbours(i):
                if ratio[j] is None:
                    # d_i b_ij = -d_j b_ji
                    ratio[j] = ratio[i] * Fraction(-b[i, j], b[j, i])
                    queue.append(j)
        den = lcm(*(ratio[v].denominator for v in comp))
        ints = [int(ratio[v] * den) for v in comp]
        g = gcd(*ints)
        for v, x in zip(comp, ints):
            ratio[v] = x // g

    for i, j in sorted(graph.edges):
        if ratio[i] * b[i, j] != -ratio[j] * b[j, i]:
            raise NotSkewSymmetrisableError("cycle", (i, j))
    return SkewSymmetriser(ratio)


@dataclass(frozen=True)
class ExchangeMatrix:
    """An ``m x n`` integer matrix whose top ``n x n`` block is skew-symmetrisable.

    Rows ``0..n-1`` are mutable indices, rows ``n..m-1`` frozen.
    """

    data: Matrix

    def __post_init__(self):
        data = self.data if isinstance(self.data, Matrix) else Matrix(self.data)
        object.__setattr__(self, "data", data)
        m, n = data.shape
        if n < 1 or n > m:
            raise DimensionError(f"exchange matrix needs 1 <= n <= m, got {m}x{n}")
        if not data.is_integral():
            raise ValueError("exchange matrix entries must be integers")
        fundamental_skew_symmetriser(self.principal)

    @property
    def m(self):
        return self.data.rows

    @property
    def n(self):
        return self.data.cols

    @property
    def principal(self):
        return self.data.submatrix(range(self.n))

    @property
    def coefficients(self):
        return self.data.submatrix(range(self.n, self.m))

    def __getitem__(self, idx):
        return self.data[idx]

    def skew_symmetriser(self):
        return fundamental_skew_symmetriser(self.principal)

    def mutate(self, k):
        return mutate_matrix(self, k)


def _sign(x):
    return (x > 0) - (x < 0)


def mutate_matrix(bt, k):
    """Matrix mutation in direction ``k`` (0-based mutable index)."""
    if not isinstance(bt, ExchangeMatrix):
        bt = ExchangeMatrix(bt)
    m, n = bt.m, bt.n
    if not 0 <= k < n:
        raise IndexError(f"mutation index {k} outside mutable range 0..{n - 1}")
    b = bt.data
    new = [
        [
            -b[i, j] if i == k or j == k
            else b[i, j] + _sign(b[i, k]) * max(0, b[i, k] * b[k, j])
            for j in range(n)
        ]
        for i in range(m)
    ]
    return ExchangeMatrix(Matrix(new, ncols=n))


def is_connected_principal(bt):
    """True iff the connectivity graph of the principal part is connected."""
    return len(connectivity_graph(bt).components) <= 1

"""Minor matrices spanning the solutions of ``A^T Lambda = 0``.

For an ``(n+2) x n`` matrix ``A`` the skew matrix of signed maximal minors
:func:`minor_block` satisfies ``A^T M(A) = 0``.  For taller ``A`` a frame
``F`` of ``n`` rows with ``det(A_F) != 0`` is fixed, and for each pair
``i < j`` outside the frame the minor block of the rows ``F + {i, j}`` is
scattered into an ``m x m`` matrix.  These ``C(m - n, 2)`` matrices are a
rational basis of the skew solutions.  They do not in general generate every
*integer* solution, so :func:`general_solution` only claims to produce
compatible matrices, not all of them.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import DimensionError, NoQuantisationError
from .linalg import Matrix, det_exact, rank_exact
from .quantizer import _exchange, build_quantisation, check_compatible

__all__ = [
    "EnhancedSolution",
    "FrameChoice",
    "choose_frame",
    "enhanced_solution",
    "general_solution",
    "homogeneous_basis",
    "minor_block",
    "reduced_index_set",
]


def _matrix(a):
    if hasattr(a, "data") and not isinstance(a, Matrix):
        a = a.data
    return a if isinstance(a, Matrix) else Matrix(a)


def reduced_index_set(i, j, m):
    """``range(m)`` without ``i`` and ``j``, ascending."""
    if i == j:
        raise ValueError("reduced index set needs distinct indices")
    if not (0 <= i < m and 0 <= j < m):
        raise IndexError(f"indices {i}, {j} outside range({m})")
    return [r for r in range(m) if r != i and r != j]


def minor_block(a):
    """Skew ``(n+2) x (n+2)`` matrix with ``m_ij = (-1)^(i+j) det(A without rows i, j)``, ``i < j``."""
    a = _matrix(a)
    m, n = a.shape
    if m != n + 2:
        raise DimensionError(f"minor block needs exactly two more rows than columns, got {a.shape}")
    out = [[0] * m for _ in range(m)]
    for i, j in combinations(range(m), 2):
        val = (-1) ** (i + j) * det_exact(a.submatrix(reduced_index_set(i, j, m)))
        out[i][j] = val
        out[j][i] = -val
    return Matrix(out, ncols=m)


@dataclass(frozen=True)
class FrameChoice:
    """``frame``: n rows with invertible submatrix; ``rest``: the other rows, ascending."""

    frame: tuple
    rest: tuple


def choose_frame(a):
    """Lexicographically least set of ``n`` rows with nonzero minor.

    Greedy row selection returns the lexicographically first basis of the
    row matroid, which is the lex-least such subset.
    """
    a = _matrix(a)
    m, n = a.shape
    rank = rank_exact(a)
    if rank < n:
        raise NoQuantisationError(rank, n)
    frame = []
    for r in range(m):
        if rank_exact(a.submatrix(frame + [r])) == len(frame) + 1:
            frame.append(r)
            if len(frame) == n:
                break
    rest = tuple(r for r in range(m) if r not in frame)
    return FrameChoice(tuple(frame), rest)


@dataclass(frozen=True)
class EnhancedSolution:
    """``matrix`` is zero outside the rows/columns ``extended = frame + {i, j}``."""

    i: int
    j: int
    matrix: Matrix
    extended: tuple


def enhanced_solution(a, frame, i, j):
    """Minor block of rows ``frame + {i, j}`` (ascending) scattered into ``m x m``."""
    a = _matrix(a)
    m = a.rows
    if i == j or i not in frame.rest or j not in frame.rest:
        raise ValueError(f"({i}, {j}) must be distinct indices outside the frame {frame.frame}")
    ext = sorted(set(frame.frame) | {i, j})
    block = minor_block(a.submatrix(ext))
    out = [[0] * m for _ in range(m)]
    for p, r in enumerate(ext):
        for s, c in enumerate(ext):
            out[r][c] = block[p, s]
    return EnhancedSolution(i, j, Matrix(out, ncols=m), tuple(ext))


def homogeneous_basis(a, frame=None):
    """All enhanced solutions for the frame, ordered by ``(i, j)``.

    Linear independence is checked on the flattened matrices before return.
    """
    a = _matrix(a)
    if frame is None:
        frame = choose_frame(a)
    sols = [enhanced_solution(a, frame, i, j) for i, j in combinations(frame.rest, 2)]
    if sols:
        stack = Matrix([s.matrix.flat() for s in sols])
        if rank_exact(stack) != len(sols):
            raise ArithmeticError("enhanced solutions are linearly dependent; frame is not of full rank")
    return sols


def general_solution(bt, coeffs, d=None):
    """``Lambda_0 + sum(c * M_ij)`` for integer coefficients ``c``.

    ``Lambda_0`` is :func:`build_quantisation`'s output; the result is
    validated with :func:`check_compatible` and returned as a compatible pair
    (its ``D'`` equals that of ``Lambda_0``).

    The basis spans every rational solution, but integer combinations need
    not reach every integral quantisation.
    """
    bt = _exchange(bt)
    base = build_quantisation(bt, d)
    basis = homogeneous_basis(bt.data)
    coeffs = list(coeffs)
    if len(coeffs) != len(basis):
        raise ValueError(f"expected {len(basis)} coefficients, got {len(coeffs)}")
    lam = base.lambda_
    for c, sol in zip(coeffs, basis):
        if not isinstance(c, int):
            raise TypeError("coefficients must be integers")
        if c:
            lam = lam + sol.matrix * c
    return check_compatible(bt, lam)

"""Compatible pairs and the explicit construction of a quantisation.

A skew-symmetric integer ``Lambda`` is compatible with an exchange matrix
``Bt`` (``m x n``) when ``Bt^T Lambda = [D' | 0]`` for a positive diagonal
``D'``.  Such a ``Lambda`` exists exactly when ``Bt`` has rank ``n``;
:func:`build_quantisation` produces one by completing the columns of ``Bt``
to a basis ``M = [Bt | Et]`` of ``Q^m`` and conjugating the block matrix
``[[D B, D E], [-E^T D, 0]]`` by ``M^{-1}``.
"""

from dataclasses import dataclass
from math import comb

from .errors import DimensionError, IncompatibleError, NoQuantisationError
from .exchange import ExchangeMatrix, SkewSymmetriser
from .linalg import Matrix, clear_denominators, invert_exact, rank_exact

__all__ = [
    "BasisCompletion",
    "CompatiblePair",
    "build_quantisation",
    "check_compatible",
    "complete_basis",
    "quantisation_space_dim",
]


def _exchange(bt):
    return bt if isinstance(bt, ExchangeMatrix) else ExchangeMatrix(bt)


def _matrix(a):
    return a if isinstance(a, Matrix) else Matrix(a)


@dataclass(frozen=True)
class CompatiblePair:
    exchange: ExchangeMatrix
    lambda_: Matrix
    dprime: SkewSymmetriser

    @property
    def m(self):
        return self.exchange.m

    @property
    def n(self):
        return self.exchange.n


@dataclass(frozen=True)
class BasisCompletion:
    """Columns ``Et`` such that ``[Bt | Et]`` is invertible.

    ``chosen_indices`` lists the 0-based ``j`` of the standard basis vectors
    ``e_j`` used, in column order.
    """

    etilde: Matrix
    chosen_indices: tuple


def check_compatible(bt, lam):
    """Validate ``(bt, lam)`` as a compatible pair and extract ``D'``.

    Raises :class:`IncompatibleError` whose ``clause`` names the first
    violated condition, checked in the order: integrality, skew-symmetry,
    right block zero, left block diagonal, diagonal positive, ``D'`` a
    skew-symmetriser of the principal part.
    """
    bt = _exchange(bt)
    lam = _matrix(lam)
    m, n = bt.m, bt.n
    if lam.shape != (m, m):
        raise DimensionError(f"Lambda must be {m}x{m}, got {lam.shape}")
    if not lam.is_integral():
        raise IncompatibleError("not-integral")
    if not lam.is_skew_symmetric():
        bad = next((i, j) for i in range(m) for j in range(i, m) if lam[i, j] != -lam[j, i])
        raise IncompatibleError("not-skew", bad)
    prod = bt.data.T @ lam
    for i in range(n):
        for j in range(n, m):
            if prod[i, j] != 0:
                raise IncompatibleError("right-block-nonzero", (i, j), f"value {prod[i, j]}")
    for i in range(n):
        for j in range(n):
            if i != j and prod[i, j] != 0:
                raise IncompatibleError("left-block-off-diagonal", (i, j), f"value {prod[i, j]}")
    for i in range(n):
        if prod[i, i] <= 0:
            raise IncompatibleError("nonpositive-diagonal", (i, i), f"diagonal entry {prod[i, i]}")
    dprime = SkewSymmetriser(prod[i, i] for i in range(n))
    # D' B = Bt^T Lambda Bt is skew whenever Lambda is, so this is a safeguard
    if not dprime.symmetrises(bt.principal):
        raise IncompatibleError("not-a-skew-symmetriser", detail=f"D' = {dprime.diag}")
    return CompatiblePair(bt, lam, dprime)


def complete_basis(bt):
    """Greedily append standard basis vectors ``e_j`` until ``[Bt | Et]`` is invertible.

    Candidates are tried frozen indices first (``j = n..m-1``), then mutable
    ones (``j = 0..n-1``), each group ascending.  When the principal part is
    invertible only frozen vectors are used and ``E`` (the top block of
    ``Et``) vanishes.  Any integer matrix of full column rank is accepted.
    """
    a = bt.data if isinstance(bt, ExchangeMatrix) else _matrix(bt)
    m, n = a.shape
    rank = rank_exact(a)
    if rank < n:
        raise NoQuantisationError(rank, n)
    current = a
    chosen = []
    for j in list(range(n, m)) + list(range(n)):
        if len(chosen) == m - n:
            break
        e = Matrix([[int(i == j)] for i in range(m)], ncols=1)
        trial = current.hstack(e)
        if rank_exact(trial) == n + len(chosen) + 1:
            current = trial
            chosen.append(j)
    etilde = current.submatrix(cols=range(n, m))
    return BasisCompletion(etilde, tuple(chosen))


def build_quantisation(bt, d=None, completion=None):
    """Integral compatible ``Lambda`` for a full-rank exchange matrix.

    ``d`` defaults to the fundamental skew-symmetriser of the principal part.
    The returned pair has ``D' = scale * d`` where ``scale`` is the lcm of
    the denominators of the rational solution ``Lambda_0``.

    Raises :class:`NoQuantisationError` when ``rank(bt) < n``.
    """
    bt = _exchange(bt)
    m, n = bt.m, bt.n
    d = bt.skew_symmetriser() if d is None else SkewSymmetriser(d)
    if len(d) != n or not d.symmetrises(bt.principal):
        raise ValueError(f"{d.diag} is not a skew-symmetriser of the principal part")
    if completion is None:
        completion = complete_basis(bt)
    big_m = bt.data.hstack(completion.etilde)
    m_inv = invert_exact(big_m)

    dm = d.matrix()
    e_top = completion.etilde.submatrix(range(n))
    top = (dm @ bt.principal).hstack(dm @ e_top)
    bottom = (-(e_top.T @ dm)).hstack(Matrix.zeros(m - n, m - n))
    inner = top.vstack(bottom)

    lambda0 = m_inv.T @ inner @ m_inv
    lam, scale = clear_denominators(lambda0)
    return CompatiblePair(bt, lam, d.scaled(scale))


def quantisation_space_dim(m, n):
    """Dimension of the skew solutions of ``Bt^T Lambda = 0``: ``C(m - n, 2)``."""
    if m < n:
        raise ValueError("need m >= n")
    return comb(m - n, 2)

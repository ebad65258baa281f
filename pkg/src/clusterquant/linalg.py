"""Dense exact matrices over the integers and rationals.

Every entry is a Python ``int`` or a reduced :class:`fractions.Fraction`
(fractions with denominator 1 are stored as ``int``).  Floats are rejected.
Indices are 0-based throughout the package.
"""

from fractions import Fraction
from math import gcd, lcm
from numbers import Integral, Rational

from .errors import DimensionError, SingularMatrixError

__all__ = [
    "Matrix",
    "det_exact",
    "rank_exact",
    "invert_exact",
    "clear_denominators",
    "nullspace_exact",
]


def _entry(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, Integral):
        return int(x)
    if isinstance(x, Rational):
        f = Fraction(x)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"exact entries only, got {type(x).__name__}")


class Matrix:
    """Immutable dense matrix with exact entries.

    Construct from nested sequences::

        >>> Matrix([[0, 1], [-1, 0]]).T
        Matrix([[0, -1], [1, 0]])
    """

    __slots__ = ("_rows", "_cols", "_data", "_hash")

    def __init__(self, rows, ncols=None):
        data = tuple(tuple(_entry(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise DimensionError("ragged rows")
        else:
            width = 0 if ncols is None else ncols
        if ncols is not None and data and width != ncols:
            raise DimensionError(f"expected {ncols} columns, got {width}")
        self._rows = len(data)
        self._cols = width
        self._data = data
        self._hash = None

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], ncols=cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def diagonal(cls, diag):
        n = len(diag)
        return cls([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def from_flat(cls, rows, cols, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise DimensionError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        return cls([entries[r * cols:(r + 1) * cols] for r in range(rows)], ncols=cols)

    @property
    def shape(self):
        return (self._rows, self._cols)

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    @property
    def is_square(self):
        return self._rows == self._cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def col(self, j):
        return tuple(r[j] for r in self._data)

    def tolist(self):
        return [list(r) for r in self._data]

    def flat(self):
        return [x for r in self._data for x in r]

    def submatrix(self, rows=None, cols=None):
        """Rows and columns picked in the given order (``None`` keeps all)."""
        rows = range(self._rows) if rows is None else rows
        cols = range(self._cols) if cols is None else list(cols)
        return Matrix([[self._data[i][j] for j in cols] for i in rows], ncols=len(cols))

    @property
    def T(self):
        return Matrix(zip(*self._data), ncols=self._rows) if self._rows else Matrix.zeros(self._cols, 0)

    def hstack(self, other):
        if self._rows != other._rows:
            raise DimensionError("row counts differ")
        return Matrix([a + b for a, b in zip(self._data, other._data)], ncols=self._cols + other._cols)

    def vstack(self, other):
        if self._cols != other._cols:
            raise DimensionError("column counts differ")
        return Matrix(self._data + other._data, ncols=self._cols)

    def is_integral(self):
        return all(isinstance(x, int) for r in self._data for x in r)

    def is_skew_symmetric(self):
        if not self.is_square:
            return False
        d = self._data
        return all(d[i][j] == -d[j][i] for i in range(self._rows) for j in range(i, self._rows))

    def is_zero(self):
        return all(x == 0 for r in self._data for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self._data))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.tolist()!r})"

    def __str__(self):
        cells = [[str(x) for x in r] for r in self._data]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)], ncols=self._cols)

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self._data], ncols=self._cols)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Matrix):
            return NotImplemented
        c = _entry(scalar)
        return Matrix([[a * c for a in r] for r in self._data], ncols=self._cols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self._cols != other._rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        oc = other.T._data if other._cols else ()
        return Matrix(
            [[sum(a * b for a, b in zip(r, c)) for c in oc] for r in self._data],
            ncols=other._cols,
        )


def _as_matrix(a):
    return a if isinstance(a, Matrix) else Matrix(a)


def _bareiss(rows, ncols):
    """In-place fraction-free forward elimination.

    Returns ``(rank, sign, last_pivot)``; for a square full-rank input the
    last pivot is the determinant up to ``sign``.
    """
    nrows = len(rows)
    rank = 0
    sign = 1
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if rows[r][c] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            rows[piv], rows[rank] = rows[rank], rows[piv]
            sign = -sign
        p = rows[rank][c]
        for r in range(rank + 1, nrows):
            f = rows[r][c]
            row_r = rows[r]
            row_p = rows[rank]
            for j in range(c + 1, ncols):
                v = row_r[j] * p - f * row_p[j]
                # exact by Sylvester's identity
                row_r[j] = v // prev if isinstance(v, int) and isinstance(prev, int) else v / prev
            row_r[c] = 0
        prev = p
        rank += 1
    return rank, sign, prev


def det_exact(a):
    """Exact determinant by fraction-free Bareiss elimination."""
    a = _as_matrix(a)
    if not a.is_square:
        raise DimensionError(f"determinant of non-square {a.shape} matrix")
    n = a.rows
    if n == 0:
        return 1
    rows = a.tolist()
    rank, sign, last = _bareiss(rows, n)
    if rank < n:
        return 0
    return _entry(sign * last)


def rank_exact(a):
    """Rank over the rationals."""
    a = _as_matrix(a)
    if a.rows == 0 or a.cols == 0:
        return 0
    rank, _, _ = _bareiss(a.tolist(), a.cols)
    return rank


def invert_exact(m):
    """Exact inverse by rational Gauss-Jordan elimination.

    Raises :class:`SingularMatrixError` (carrying the rank) on singular input.
    """
    m = _as_matrix(m)
    if not m.is_square:
        raise DimensionError(f"inverse of non-square {m.shape} matrix")
    n = m.rows
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m.tolist())]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise SingularMatrixError(rank_exact(m), n)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return Matrix([row[n:] for row in aug], ncols=n)


def clear_denominators(a):
    """Scale ``a`` by the lcm of its entry denominators.

    Returns ``(integer_matrix, scale)`` with ``scale`` a positive
    :class:`~fractions.Fraction`.  No common factor of the resulting integers
    is divided out, so ``scale`` is the least positive *integer* making every
    entry integral.
    """
    a = _as_matrix(a)
    den = 1
    for x in a.flat():
        if not isinstance(x, int):
            den = lcm(den, x.denominator)
    return a * den, Fraction(den)


def nullspace_exact(a):
    """Basis of the right null space ``{x : a x = 0}`` as a list of vectors.

    Reduced row echelon form over the rationals; the basis vectors are
    scaled to primitive integer vectors.
    """
    a = _as_matrix(a)
    nrows, ncols = a.shape
    rows = [[Fraction(x) for x in r] for r in a.tolist()]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        den = lcm(*(x.denominator for x in v))
        ints = [int(x * den) for x in v]
        g = gcd(*ints)
        basis.append([x // g for x in ints])
    return basis

"""Exception hierarchy shared by all modules."""


class ClusterQuantError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(ClusterQuantError, ValueError):
    """Operands have incompatible shapes."""


class SingularMatrixError(ClusterQuantError, ArithmeticError):
    """A square matrix that had to be invertible is singular."""

    def __init__(self, rank, size):
        super().__init__(f"matrix of size {size} is singular (rank {rank})")
        self.rank = rank
        self.size = size


class NotSkewSymmetrisableError(ClusterQuantError, ValueError):
    """The principal part admits no positive diagonal skew-symmetriser.

    ``reason`` is one of ``"nonzero-diagonal"``, ``"zero-pattern"``,
    ``"sign"`` or ``"cycle"``; ``entry`` is the offending ``(i, j)`` pair.
    """

    def __init__(self, reason, entry, message=None):
        self.reason = reason
        self.entry = entry
        super().__init__(message or f"not skew-symmetrisable ({reason} at {entry})")


class NoQuantisationError(ClusterQuantError):
    """The exchange matrix is rank deficient, so no compatible Lambda exists."""

    def __init__(self, rank, n):
        self.rank = rank
        self.n = n
        super().__init__(f"no quantisation exists: rank {rank} < n = {n}")


class IncompatibleError(ClusterQuantError, ValueError):
    """A candidate Lambda violates the compatibility equation.

    ``clause`` names the broken condition: ``"not-skew"``,
    ``"right-block-nonzero"``, ``"left-block-off-diagonal"``,
    ``"nonpositive-diagonal"``, ``"not-a-skew-symmetriser"`` or
    ``"not-integral"``.  ``position`` is a 0-based ``(row, col)`` when
    meaningful.
    """

    def __init__(self, clause, position=None, detail=""):
        self.clause = clause
        self.position = position
        self.detail = detail
        where = f" at {position}" if position is not None else ""
        extra = f": {detail}" if detail else ""
        super().__init__(f"incompatible ({clause}{where}){extra}")


class TorusMismatchError(ClusterQuantError, ValueError):
    """Elements of different quantum tori were combined."""

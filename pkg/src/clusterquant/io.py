"""JSON documents for matrices and quivers.

A matrix document::

    {"rows": 4, "cols": 2, "entries": [[0, 1], [-1, 0], [1, 0], [0, 1]], "n": 2}

``n`` (mutable count) is optional and defaults to ``cols``.  Entries must be
JSON integers.  An exchange matrix may instead be given as a quiver with
1-based vertices, mutable ones first::

    {"quiver": {"vertices": 4, "mutable": 2, "arrows": [[1, 2, 1], [3, 1, 1]]}}

Each arrow ``[i, j, k]`` adds ``k`` arrows ``i -> j`` (``k`` defaults to 1),
contributing ``+k`` to ``b_ij`` and ``-k`` to ``b_ji``.  Documents produced
by the CLI that wrap a matrix under ``"exchange"`` or ``"lambda"`` are
accepted where a plain matrix is expected.
"""

import json

from .exchange import ExchangeMatrix
from .linalg import Matrix

__all__ = [
    "DocumentError",
    "exchange_from_document",
    "load_document",
    "matrix_document",
    "matrix_from_document",
    "quiver_to_matrix",
]


class DocumentError(ValueError):
    """Malformed input document."""


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise DocumentError(f"{where}: expected an integer, got {x!r}")
    return x


def load_document(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from exc


def matrix_from_document(doc, key=None):
    """Matrix (and optional ``n``) from a matrix document."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if key and key in doc:
        doc = doc[key]
        if not isinstance(doc, dict):
            raise DocumentError(f"{key!r} must be a JSON object")
    if "entries" not in doc:
        raise DocumentError("missing 'entries'")
    entries = doc["entries"]
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise DocumentError("'entries' must be a list of rows")
    rows = _int(doc.get("rows", len(entries)), "rows")
    cols = _int(doc.get("cols", len(entries[0]) if entries else 0), "cols")
    if rows < 1 or cols < 1:
        raise DocumentError("matrix must have at least one row and column")
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise DocumentError(f"entries do not form a {rows}x{cols} matrix")
    data = [[_int(x, f"entry ({i + 1},{j + 1})") for j, x in enumerate(r)] for i, r in enumerate(entries)]
    n = doc.get("n")
    if n is not None:
        n = _int(n, "n")
        if not 1 <= n <= rows:
            raise DocumentError(f"n = {n} must satisfy 1 <= n <= rows = {rows}")
    return Matrix(data, ncols=cols), n


def quiver_to_matrix(quiver):
    """Signed adjacency ``m x n`` matrix of a quiver description."""
    if not isinstance(quiver, dict):
        raise DocumentError("'quiver' must be a JSON object")
    m = _int(quiver.get("vertices"), "vertices")
    n = _int(quiver.get("mutable", m), "mutable")
    if not 1 <= n <= m:
        raise DocumentError(f"need 1 <= mutable <= vertices, got {n}, {m}")
    b = [[0] * m for _ in range(m)]
    for arrow in quiver.get("arrows", []):
        if not isinstance(arrow, list) or len(arrow) not in (2, 3):
            raise DocumentError(f"arrow must be [i, j] or [i, j, k], got {arrow!r}")
        i, j = _int(arrow[0], "arrow tail"), _int(arrow[1], "arrow head")
        k = _int(arrow[2], "multiplicity") if len(arrow) == 3 else 1
        if not (1 <= i <= m and 1 <= j <= m) or i == j:
            raise DocumentError(f"bad arrow {arrow!r}")
        b[i - 1][j - 1] += k
        b[j - 1][i - 1] -= k
    return Matrix([row[:n] for row in b], ncols=n)


def exchange_from_document(doc):
    """Exchange matrix from a matrix, quiver, or wrapped document."""
    if isinstance(doc, dict) and "quiver" in doc:
        data = quiver_to_matrix(doc["quiver"])
    else:
        mat, n = matrix_from_document(doc, key="exchange")
        data = mat if n is None or n == mat.cols else mat.submatrix(cols=range(n))
    try:
        return ExchangeMatrix(data)
    except ValueError as exc:
        raise DocumentError(f"not an exchange matrix: {exc}") from exc


def matrix_document(mat, n=None):
    doc = {"rows": mat.rows, "cols": mat.cols, "entries": mat.tolist()}
    if n is not None:
        doc["n"] = n
    return doc

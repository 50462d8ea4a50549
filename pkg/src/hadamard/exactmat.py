"""Exact integer matrix kernel for Hadamard-type constructions.

Matrices are numpy arrays of small signed integers.  Entries are stored
as int8, every Gram product is accumulated in int64, and determinants
are computed in exact arbitrary-precision integer arithmetic.  There is
no floating point and no tolerance anywhere: equality is entry-wise.

Conventions
-----------
* a "sign matrix" has entries in {-1, +1},
* a "ternary matrix" has entries in {-1, 0, +1},
* ``circulant(r)`` places ``r[(j - i) % n]`` at position (i, j), i.e.
  each row is the previous one rotated right by one.
"""

import numpy as np

__all__ = [
    "circulant", "back_identity", "tensor", "assemble",
    "is_sign_matrix", "is_ternary_matrix",
    "is_hadamard", "is_skew_hadamard", "are_t_matrices", "is_circulant",
    "exact_det", "abs_det_is_maximal",
    "to_pm1", "from_pm1",
]


def _as_matrix(m):
    a = np.asarray(m, dtype=np.int8)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix, got shape %s" % (a.shape,))
    return a


def circulant(first_row):
    """Circulant ternary matrix whose i-th row is ``first_row`` rotated right by i."""
    r = np.asarray(first_row, dtype=np.int8)
    if r.ndim != 1 or r.size == 0:
        raise ValueError("first row must be a non-empty 1-d sequence")
    if not np.isin(r, (-1, 0, 1)).all():
        raise ValueError("circulant entries must lie in {-1, 0, +1}")
    n = r.size
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return r[idx]


def back_identity(n):
    """Permutation matrix with all ones on the anti-diagonal (an involution)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return np.fliplr(np.eye(n, dtype=np.int8))


def tensor(a, b):
    """Kronecker product; block (i, j) of the result is a[i, j] * b."""
    return np.kron(np.asarray(a, dtype=np.int8), np.asarray(b, dtype=np.int8))


def _block_cell(cell):
    # A grid cell is a scalar in {-1,0,+1}, a matrix, or (matrix, sign)
    # or (matrix, sign, transpose_flag).
    if isinstance(cell, (int, np.integer)):
        if cell not in (-1, 0, 1):
            raise ValueError("scalar block entries must lie in {-1, 0, +1}")
        return np.array([[cell]], dtype=np.int8)
    if isinstance(cell, tuple):
        m = _as_matrix(cell[0])
        sign = cell[1] if len(cell) > 1 else 1
        if sign not in (-1, 1):
            raise ValueError("block sign must be -1 or +1")
        if len(cell) > 2 and cell[2]:
            m = m.T
        return (sign * m).astype(np.int8)
    return _as_matrix(cell)


def assemble(grid):
    """Assemble a block matrix from a rectangular grid of cells.

    Each cell is a scalar (a 1x1 border entry), a matrix, or a tuple
    ``(matrix, sign)`` / ``(matrix, sign, transpose)``.  All cells in a
    row must share their height and all cells in a column their width;
    a mismatch raises ValueError.
    """
    if not grid or any(not row for row in grid):
        raise ValueError("empty block grid")
    blocks = [[_block_cell(c) for c in row] for row in grid]
    ncols = len(blocks[0])
    if any(len(row) != ncols for row in blocks):
        raise ValueError("ragged block grid")
    for i, row in enumerate(blocks):
        heights = {b.shape[0] for b in row}
        if len(heights) != 1:
            raise ValueError("blocks in row %d differ in height" % i)
    for j in range(ncols):
        widths = {row[j].shape[1] for row in blocks}
        if len(widths) != 1:
            raise ValueError("blocks in column %d differ in width" % j)
    return np.block([[b for b in row] for row in blocks]).astype(np.int8)


def is_sign_matrix(m):
    a = np.asarray(m)
    return a.ndim == 2 and a.shape[0] == a.shape[1] and bool(np.isin(a, (-1, 1)).all())


def is_ternary_matrix(m):
    a = np.asarray(m)
    return a.ndim == 2 and a.shape[0] == a.shape[1] and bool(np.isin(a, (-1, 0, 1)).all())


def is_circulant(m):
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return bool((a == circulant_like(a)).all()) if is_ternary_matrix(a) else False


def circulant_like(m):
    """Circulant matrix generated by the first row of ``m``."""
    return circulant(np.asarray(m)[0])


def _gram(h):
    a = np.asarray(h, dtype=np.int64)
    return a @ a.T


def _say(verbose, msg):
    if verbose:
        print(msg)


def is_hadamard(h, verbose=False):
    """True iff ``h`` is a square (-1,+1) matrix with H H^T = n I.

    With ``verbose`` the first failed property is printed; the result is
    still a plain boolean (checkers never raise).
    """
    a = np.asarray(h)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        _say(verbose, "not a square matrix")
        return False
    if not np.isin(a, (-1, 1)).all():
        _say(verbose, "entries are not all -1 or +1")
        return False
    n = a.shape[0]
    g = _gram(a)
    if not (g == n * np.eye(n, dtype=np.int64)).all():
        bad = np.argwhere((g != 0) & ~np.eye(n, dtype=bool))
        if bad.size:
            i, j = bad[0]
            _say(verbose, "rows %d,%d not orthogonal" % (i, j))
        else:
            _say(verbose, "diagonal of the Gram matrix is wrong")
        return False
    return True


def is_skew_hadamard(h, verbose=False):
    """True iff ``h`` is Hadamard and H - I is skew-symmetric."""
    if not is_hadamard(h, verbose=verbose):
        _say(verbose, "not a Hadamard matrix")
        return False
    a = np.asarray(h, dtype=np.int64)
    s = a - np.eye(a.shape[0], dtype=np.int64)
    if not (s.T == -s).all():
        _say(verbose, "Hadamard but not skew")
        return False
    return True


def are_t_matrices(x1, x2, x3, x4, verbose=False):
    """Check the T-matrix conditions for four ternary circulants.

    Requires equal order, circulant (-1,0,+1) matrices whose supports
    partition all n^2 cells, with X1 X1^T + ... + X4 X4^T = n I.
    """
    mats = [np.asarray(x, dtype=np.int8) for x in (x1, x2, x3, x4)]
    n = mats[0].shape[0]
    if any(m.shape != (n, n) for m in mats):
        _say(verbose, "orders differ")
        return False
    for k, m in enumerate(mats):
        if not is_ternary_matrix(m):
            _say(verbose, "matrix %d is not ternary" % (k + 1))
            return False
        if not (m == circulant_like(m)).all():
            _say(verbose, "matrix %d is not circulant" % (k + 1))
            return False
    support = sum(np.abs(m.astype(np.int64)) for m in mats)
    if not (support == 1).all():
        _say(verbose, "supports do not partition the cells")
        return False
    gram = sum(_gram(m) for m in mats)
    if not (gram == n * np.eye(n, dtype=np.int64)).all():
        _say(verbose, "Gram sum is not nI")
        return False
    return True


def exact_det(m):
    """Exact determinant via fraction-free (Bareiss) elimination on Python ints."""
    a = [[int(v) for v in row] for row in np.asarray(m)]
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise ValueError("expected a non-empty square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def abs_det_is_maximal(h):
    """True iff |det H| attains the Hadamard bound n^(n/2) (checked as det^2 = n^n)."""
    a = np.asarray(h)
    n = a.shape[0]
    d = exact_det(a)
    return d * d == n ** n


_PM1_CHARS = {1: "+", -1: "-", 0: "0"}
_PM1_VALUES = {"+": 1, "-": -1, "0": 0}


def to_pm1(m):
    """Render a ternary matrix in the pm1 text format (one +/-/0 row per line)."""
    a = np.asarray(m)
    if not is_ternary_matrix(a):
        raise ValueError("pm1 format requires a square matrix over {-1, 0, +1}")
    return "".join("".join(_PM1_CHARS[int(v)] for v in row) + "\n" for row in a)


def from_pm1(text):
    """Parse the pm1 text format back into an int8 matrix."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty pm1 input")
    n = len(lines)
    rows = []
    for ln in lines:
        ln = ln.strip()
        if len(ln) != n:
            raise ValueError("pm1 input is not square: %d lines, row of width %d" % (n, len(ln)))
        try:
            rows.append([_PM1_VALUES[c] for c in ln])
        except KeyError as e:
            raise ValueError("invalid pm1 character %r" % (e.args[0],)) from None
    return np.array(rows, dtype=np.int8)

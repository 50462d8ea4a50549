"""Shared machinery for the offline catalog searches.

All searches work the same way: enumerate +-1 candidate rows with some
positions pinned, throw away rows whose power spectrum exceeds the cap
implied by the target autocorrelation identity (a sound filter: any row
belonging to a valid family respects the cap at every sampled angle),
then meet-in-the-middle join pairs of rows on their autocorrelation
vectors.
"""

import numpy as np


def pm_rows(length, fixed=None):
    """All +-1 rows of the given length, int8, with ``fixed`` positions pinned.

    fixed maps position -> value.  Rows are enumerated with the first free
    position as the highest bit, so the output is deterministic.
    """
    fixed = fixed or {}
    free = [i for i in range(length) if i not in fixed]
    k = len(free)
    n_rows = 1 << k
    out = np.empty((n_rows, length), dtype=np.int8)
    for pos, val in fixed.items():
        out[:, pos] = val
    codes = np.arange(n_rows, dtype=np.uint64)
    for b, pos in enumerate(free):
        bit = (codes >> np.uint64(k - 1 - b)) & np.uint64(1)
        out[:, pos] = np.where(bit == 0, 1, -1).astype(np.int8)
    return out


def npaf_table(rows, max_shift=None):
    """Nonperiodic autocorrelations N(j) for j = 1..max_shift, per row.

    Returns an int16 array of shape (n_rows, max_shift).
    """
    rows16 = rows.astype(np.int16)
    n = rows.shape[1]
    if max_shift is None:
        max_shift = n - 1
    out = np.zeros((rows.shape[0], max_shift), dtype=np.int16)
    for j in range(1, min(max_shift, n - 1) + 1):
        out[:, j - 1] = (rows16[:, : n - j] * rows16[:, j:]).sum(axis=1)
    return out


def paf_table(rows):
    """Periodic autocorrelations P(j) for j = 1..n//2, per row."""
    rows16 = rows.astype(np.int16)
    n = rows.shape[1]
    h = n // 2
    out = np.zeros((rows.shape[0], h), dtype=np.int16)
    for j in range(1, h + 1):
        out[:, j - 1] = (rows16 * np.roll(rows16, -j, axis=1)).sum(axis=1)
    return out


def psd_filter(rows, cap, n_samples=0, chunk=200_000):
    """Keep rows whose squared spectrum never exceeds ``cap``.

    With n_samples = 0 the spectrum is evaluated at the row length's own
    DFT points (exact for periodic identities); otherwise the rows are
    zero-padded to n_samples points (a sampled, still sound, bound for
    nonperiodic identities).
    """
    n = rows.shape[1]
    m = n_samples or n
    keep = np.zeros(rows.shape[0], dtype=bool)
    for lo in range(0, rows.shape[0], chunk):
        part = rows[lo:lo + chunk].astype(np.float64)
        if m > n:
            part = np.pad(part, ((0, 0), (0, m - n)))
        spec = np.abs(np.fft.rfft(part, axis=1)) ** 2
        keep[lo:lo + part.shape[0]] = spec.max(axis=1) <= cap + 1e-6
    return rows[keep]


def key_join(keys_a, keys_b, target):
    """Yield index pairs (i, j) with keys_a[i] + keys_b[j] == target.

    keys are int16 arrays of equal width; target is a 1-d vector.  The
    join sorts the b-side once and probes with the complement of a.
    """
    if keys_a.shape[1] == 0:
        for i in range(keys_a.shape[0]):
            for j in range(keys_b.shape[0]):
                yield i, j
        return
    want = (np.asarray(target, dtype=np.int16)[None, :] - keys_a).astype(np.int16)
    b_view = np.ascontiguousarray(keys_b).view(
        [("", np.int16)] * keys_b.shape[1]).ravel()
    order = np.argsort(b_view, kind="stable")
    b_sorted = b_view[order]
    w_view = np.ascontiguousarray(want).view(
        [("", np.int16)] * want.shape[1]).ravel()
    lo = np.searchsorted(b_sorted, w_view, side="left")
    hi = np.searchsorted(b_sorted, w_view, side="right")
    for i in np.nonzero(hi > lo)[0]:
        for j in order[lo[i]:hi[i]]:
            yield int(i), int(j)


def rows_by_sum(rows):
    """Split rows into {row_sum: row_array} classes."""
    sums = rows.astype(np.int16).sum(axis=1)
    return {int(s): rows[sums == s] for s in np.unique(sums)}

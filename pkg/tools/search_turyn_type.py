#!/usr/bin/env python3
"""Search for Turyn type sequences: X, Y, Z, W of lengths n, n, n, n-1
with N_X(j) + N_Y(j) + 2 N_Z(j) + 2 N_W(j) = 0 for all j >= 1.

Each sequence is normalized to start with +1 (independent negations do
not change any N).  The identity bounds the spectra: |X|^2 and |Y|^2 by
6n-2, |Z|^2 and |W|^2 by (6n-2)/2.  After spectral filtering, (X, Y)
pairs are joined against (Z, W) pairs on the weighted N vectors, one
row-sum class combination at a time.
"""

import itertools
import json
import sys

import numpy as np

from _searchlib import pm_rows, npaf_table, psd_filter, key_join, rows_by_sum


def _pairs(cls_a, cls_b, tab_a, tab_b, weight=1):
    ia = np.repeat(np.arange(len(cls_a)), len(cls_b))
    ib = np.tile(np.arange(len(cls_b)), len(cls_a))
    keys = (weight * (tab_a[ia] + tab_b[ib])).astype(np.int16)
    return ia, ib, keys


def search(n, pair_budget=60_000_000, verbose=True):
    total = 6 * n - 2
    xs = psd_filter(pm_rows(n, {0: 1}), total, n_samples=4 * n)
    zs = psd_filter(pm_rows(n, {0: 1}), total / 2, n_samples=4 * n)
    ws = psd_filter(pm_rows(n - 1, {0: 1}), total / 2, n_samples=4 * n)
    if verbose:
        print("n=%d survivors: XY %d Z %d W %d" % (n, len(xs), len(zs), len(ws)))

    x_cls = rows_by_sum(xs)
    z_cls = rows_by_sum(zs)
    w_cls = rows_by_sum(ws)
    tabs = {}

    def tab(rows, key):
        if key not in tabs:
            tabs[key] = npaf_table(rows, n - 1)
        return tabs[key]

    best = None
    for sx, sy, sz, sw in itertools.product(x_cls, x_cls, z_cls, w_cls):
        if sx > sy:
            continue  # X and Y are interchangeable
        if sx * sx + sy * sy + 2 * sz * sz + 2 * sw * sw != total:
            continue
        xa, ya, za, wa = x_cls[sx], x_cls[sy], z_cls[sz], w_cls[sw]
        if len(xa) * len(ya) > pair_budget or len(za) * len(wa) > pair_budget:
            if verbose:
                print("  class (%d,%d,%d,%d) skipped: too many pairs"
                      % (sx, sy, sz, sw))
            continue
        ia, ib, keys_xy = _pairs(xa, ya, tab(xa, ("x", sx)), tab(ya, ("x", sy)))
        ja, jb, keys_zw = _pairs(za, wa, tab(za, ("z", sz)), tab(wa, ("w", sw)),
                                 weight=2)
        for i, j in key_join(keys_xy, keys_zw, np.zeros(n - 1, dtype=np.int16)):
            fam = (tuple(int(t) for t in xa[ia[i]]),
                   tuple(int(t) for t in ya[ib[i]]),
                   tuple(int(t) for t in za[ja[j]]),
                   tuple(int(t) for t in wa[jb[j]]))
            if best is None or fam < best:
                best = fam
        if best is not None:
            break  # first class with a hit is enough; 'best' is its minimum
    return best


def main(lengths):
    found = {}
    for n in lengths:
        fam = search(n)
        if fam is None:
            print("n=%d: no family found" % n)
            continue
        print("n=%d: %s" % (n, fam))
        found[n] = fam
    print(json.dumps({str(k): v for k, v in found.items()}))
    return found


if __name__ == "__main__":
    ns = [int(a) for a in sys.argv[1:]] or [2, 4, 6, 8]
    main(ns)

#!/usr/bin/env python3
"""Exhaustive search for Turyn sequences (lengths l, l, l-1, l-1).

X starts with +1 and ends with -1, U ends with +1 (its first entry is
forced to +1 by the j = l-1 term of the defining identity), and Y, V are
normalized to start with +1 (negating either leaves every
autocorrelation unchanged).  Pairs (X, U) and (Y, V) are joined on their
autocorrelation sum vectors; the lexicographically smallest family is
kept.  Results are verified and appended to the sequence catalog by
update_catalog.py.
"""

import itertools
import json
import sys

import numpy as np

from _searchlib import pm_rows, npaf_table, psd_filter, key_join, rows_by_sum


def search(l, verbose=True):
    cap = 4 * l - 2
    xs = pm_rows(l, {0: 1, l - 1: -1})
    us = pm_rows(l, {0: 1, l - 1: 1})
    ys = pm_rows(l - 1, {0: 1})
    vs = pm_rows(l - 1, {0: 1})
    xs = psd_filter(xs, cap, n_samples=4 * l)
    us = psd_filter(us, cap, n_samples=4 * l)
    ys = psd_filter(ys, cap, n_samples=4 * l)
    vs = psd_filter(vs, cap, n_samples=4 * l)
    if verbose:
        print("l=%d survivors: X %d U %d Y %d V %d"
              % (l, len(xs), len(us), len(ys), len(vs)))

    x_cls, u_cls, y_cls, v_cls = map(rows_by_sum, (xs, us, ys, vs))
    best = None
    for sx, su, sy, sv in itertools.product(x_cls, u_cls, y_cls, v_cls):
        if sx * sx + su * su + sy * sy + sv * sv != cap:
            continue
        xa, ua, ya, va = x_cls[sx], u_cls[su], y_cls[sy], v_cls[sv]
        # (X, U) side keys over shifts 1..l-2 (the l-1 shift is 0 by the
        # endpoint constraints, and Y, V cannot reach it).
        kx = npaf_table(xa, l - 2)
        ku = npaf_table(ua, l - 2)
        ky = npaf_table(ya, l - 2)
        kv = npaf_table(va, l - 2)
        ia = np.repeat(np.arange(len(xa)), len(ua))
        ib = np.tile(np.arange(len(ua)), len(xa))
        keys_xu = (kx[ia] + ku[ib]).astype(np.int16)
        ja = np.repeat(np.arange(len(ya)), len(va))
        jb = np.tile(np.arange(len(va)), len(ya))
        keys_yv = (ky[ja] + kv[jb]).astype(np.int16)
        for i, j in key_join(keys_xu, keys_yv, np.zeros(l - 2, dtype=np.int16)):
            fam = (tuple(int(t) for t in xa[ia[i]]),
                   tuple(int(t) for t in ua[ib[i]]),
                   tuple(int(t) for t in ya[ja[j]]),
                   tuple(int(t) for t in va[jb[j]]))
            if best is None or fam < best:
                best = fam
    return best


def main(lengths):
    found = {}
    for l in lengths:
        fam = search(l)
        if fam is None:
            print("l=%d: no family found" % l)
            continue
        print("l=%d: %s" % (l, fam))
        found[l] = fam
    print(json.dumps({str(k): v for k, v in found.items()}))
    return found


if __name__ == "__main__":
    ls = [int(a) for a in sys.argv[1:]] or [2, 3, 4, 5, 6, 7, 8]
    main(ls)

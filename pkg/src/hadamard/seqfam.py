"""Sequence families with vanishing nonperiodic autocorrelation.

Covers the four family kinds used by the matrix constructions:

* ``turyn``       four (-1,+1) sequences of lengths (l, l, l-1, l-1) with
                  fixed endpoints, plain autocorrelation sum zero;
* ``turyn_type``  lengths (n, n, n, n-1), weighted sum with weights (1,1,2,2);
* ``base``        lengths (n+p, n+p, n, n), plain sum;
* ``t_sequence``  four (-1,0,+1) rows of equal length with disjoint support.

Sequences are 0-indexed tuples internally.  The catalog lives in a data
file and every record is re-verified when loaded; a record that fails
its kind's identity is a hard error naming the record.
"""

import functools
from dataclasses import dataclass, field as _field

from ._data import CatalogError, load_json

__all__ = [
    "SeqFamily", "npaf", "is_complementary", "interleave",
    "turyn_sequences", "turyn_type_sequences", "base_sequences",
    "t_sequences", "is_t_sequences", "check_family",
    "TURYN_LENGTHS", "catalog_turyn_type_lengths", "reachable_t_lengths",
]

# Lengths for which four Turyn sequences are known to exist.
TURYN_LENGTHS = frozenset({2, 3, 4, 5, 6, 7, 8, 13, 15})


@dataclass(frozen=True)
class SeqFamily:
    """An ordered family of integer sequences with a declared kind."""

    kind: str
    members: tuple
    params: dict = _field(compare=False)

    @property
    def lengths(self):
        return tuple(len(m) for m in self.members)

    def __iter__(self):
        return iter(self.members)


def npaf(a, j):
    """Nonperiodic autocorrelation sum(a_i * a_{i+j}); zero once j reaches len(a)."""
    if j < 0:
        raise ValueError("shift must be >= 0")
    n = len(a)
    return sum(a[i] * a[i + j] for i in range(n - j))


def is_complementary(members, weights=None):
    """True iff the weighted autocorrelation sums vanish for every j >= 1."""
    members = [tuple(m) for m in members]
    if weights is None:
        weights = (1,) * len(members)
    if len(weights) != len(members):
        raise ValueError("need one weight per sequence")
    top = max(len(m) for m in members)
    return all(
        sum(w * npaf(m, j) for w, m in zip(weights, members)) == 0
        for j in range(1, top)
    )


def interleave(a, b):
    """Alternating merge (a1, b1, a2, b2, ..., a_k); requires len(b) = len(a) - 1."""
    a, b = tuple(a), tuple(b)
    if len(b) != len(a) - 1:
        raise ValueError("interleave needs len(b) == len(a) - 1")
    out = []
    for x, y in zip(a, b):
        out.extend((x, y))
    out.append(a[-1])
    return tuple(out)


def _pm1(members):
    return all(all(v in (-1, 1) for v in m) for m in members)


def _ternary(members):
    return all(all(v in (-1, 0, 1) for v in m) for m in members)


def is_t_sequences(family, verbose=False):
    """Check the T-sequence conditions: four equal-length ternary rows,
    exactly one nonzero entry per position, autocorrelation sum zero."""
    members = [tuple(m) for m in family]
    if len(members) != 4:
        if verbose:
            print("expected four sequences")
        return False
    n = len(members[0])
    if any(len(m) != n for m in members):
        if verbose:
            print("lengths differ")
        return False
    if not _ternary(members):
        if verbose:
            print("entries outside {-1, 0, +1}")
        return False
    if any(sum(abs(m[i]) for m in members) != 1 for i in range(n)):
        if verbose:
            print("supports do not partition the positions")
        return False
    if not is_complementary(members):
        if verbose:
            print("autocorrelation sum does not vanish")
        return False
    return True


def check_family(fam, verbose=False):
    """Verify a SeqFamily against its kind's defining identity."""
    members = [tuple(m) for m in fam.members]
    kind = fam.kind
    if kind == "turyn":
        l = fam.params["l"]
        if [len(m) for m in members] != [l, l, l - 1, l - 1] or not _pm1(members):
            return _fail(verbose, "bad turyn shape")
        x, u = members[0], members[1]
        if x[0] != 1 or x[-1] != -1 or u[-1] != 1:
            return _fail(verbose, "turyn endpoint constraints violated")
        return is_complementary(members) or _fail(verbose, "turyn sum not zero")
    if kind == "turyn_type":
        n = fam.params["n"]
        if [len(m) for m in members] != [n, n, n, n - 1] or not _pm1(members):
            return _fail(verbose, "bad turyn_type shape")
        return (is_complementary(members, (1, 1, 2, 2))
                or _fail(verbose, "weighted sum not zero"))
    if kind == "base":
        n, p = fam.params["n"], fam.params["p"]
        if [len(m) for m in members] != [n + p, n + p, n, n] or not _pm1(members):
            return _fail(verbose, "bad base shape")
        return is_complementary(members) or _fail(verbose, "base sum not zero")
    if kind == "t_sequence":
        return is_t_sequences(members, verbose=verbose)
    return _fail(verbose, "unknown family kind %r" % kind)


def _fail(verbose, msg):
    if verbose:
        print(msg)
    return False


@functools.lru_cache(maxsize=None)
def _catalog():
    """Load and verify the sequence catalog, keyed by (kind, key params)."""
    records = load_json("sequences.json")
    out = {}
    for i, rec in enumerate(records):
        try:
            fam = SeqFamily(rec["kind"], tuple(tuple(m) for m in rec["members"]),
                            dict(rec["params"]))
        except (KeyError, TypeError) as e:
            raise CatalogError("sequences.json record %d is malformed: %s" % (i, e))
        if not check_family(fam):
            raise CatalogError("sequences.json record %d (%s %s) fails verification"
                               % (i, fam.kind, fam.params))
        if fam.kind == "turyn":
            key = ("turyn", fam.params["l"])
        elif fam.kind == "turyn_type":
            key = ("turyn_type", fam.params["n"])
        elif fam.kind == "base":
            key = ("base", fam.params["n"], fam.params["p"])
        else:
            key = ("t_sequence", fam.params["t"])
        out[key] = fam
    return out


def turyn_sequences(l, existence=False):
    """Turyn sequences of lengths (l, l, l-1, l-1) from the catalog.

    In existence mode, answers whether such sequences are known at all;
    a known length whose data is missing from the catalog raises
    CatalogError in construct mode.
    """
    if existence:
        return l in TURYN_LENGTHS
    if l not in TURYN_LENGTHS:
        raise ValueError("no Turyn sequences of length %d are known" % l)
    fam = _catalog().get(("turyn", l))
    if fam is None:
        raise CatalogError("Turyn sequences of length %d are not in the catalog" % l)
    return fam


def turyn_type_sequences(n, existence=False):
    """Turyn type sequences of lengths (n, n, n, n-1) from the catalog."""
    fam = _catalog().get(("turyn_type", n))
    if existence:
        return fam is not None
    if fam is None:
        raise ValueError("no Turyn type sequences of length %d in the catalog" % n)
    return fam


def catalog_turyn_type_lengths():
    return sorted(k[1] for k in _catalog() if k[0] == "turyn_type")


def _concat(*seqs):
    out = []
    for s in seqs:
        out.extend(s)
    return tuple(out)


def base_sequences(n, p, existence=False):
    """Base sequences of lengths (n+p, n+p, n, n).

    p = 1 sources the Turyn catalog; p = n - 1 concatenates a Turyn type
    family (A = Z;W, B = Z;-W, C = X, D = Y); anything else must be a
    direct catalog record.
    """
    if p == 1 and turyn_sequences(n + 1, existence=True):
        if existence:
            return True
        x, u, y, v = turyn_sequences(n + 1).members
        return _wrap_base(n, p, (x, u, y, v))
    if p == n - 1 and n >= 2 and turyn_type_sequences(n, existence=True):
        if existence:
            return True
        x, y, z, w = turyn_type_sequences(n).members
        a = _concat(z, w)
        b = _concat(z, tuple(-t for t in w))
        fam = _wrap_base(n, p, (a, b, x, y))
        return fam
    fam = _catalog().get(("base", n, p))
    if existence:
        return fam is not None
    if fam is None:
        raise ValueError("no source for base sequences of lengths "
                         "(%d, %d, %d, %d)" % (n + p, n + p, n, n))
    return fam


def _wrap_base(n, p, members):
    fam = SeqFamily("base", tuple(tuple(m) for m in members), {"n": n, "p": p})
    if not check_family(fam):
        raise CatalogError("derived base sequences (n=%d, p=%d) fail verification"
                           % (n, p))
    return fam


def _halves(a, b):
    if len(a) != len(b) or not _pm1((a, b)):
        raise ValueError("half sums need two (-1,+1) sequences of equal length")
    plus = tuple((x + y) // 2 for x, y in zip(a, b))
    minus = tuple((x - y) // 2 for x, y in zip(a, b))
    return plus, minus


def _t_from_base(fam):
    n, p = fam.params["n"], fam.params["p"]
    a, b, c, d = fam.members
    ab_plus, ab_minus = _halves(a, b)
    cd_plus, cd_minus = _halves(c, d)
    zn = (0,) * n
    znp = (0,) * (n + p)
    return (_concat(ab_plus, zn), _concat(ab_minus, zn),
            _concat(znp, cd_plus), _concat(znp, cd_minus))


def _t_from_turyn(fam):
    l = fam.params["l"]
    x, u, y, v = fam.members
    t1 = (1,) + (0,) * (4 * l - 2)
    t2 = (0,) + interleave(x, y) + (0,) * (2 * l - 1)
    t3 = (0,) * (2 * l) + interleave(u, (0,) * (l - 1))
    t4 = (0,) * (2 * l) + interleave((0,) * l, v)
    return t1, t2, t3, t4


def _t_sources(t):
    # Preference order: Turyn via the length 4l-1 theorem first (least
    # catalog data), then base-sequence folding at length 2n+p.
    if t % 4 == 3:
        yield ("turyn", (t + 1) // 4)
    if t % 2 == 1:
        l = (t + 1) // 2          # base from Turyn: p = 1, n = l - 1
        if l >= 2:
            yield ("base", l - 1, 1)
    if (t + 1) % 3 == 0:
        m = (t + 1) // 3          # base from Turyn type: n = m, p = m - 1
        if m >= 2:
            yield ("base", m, m - 1)
    for key in _catalog():
        if key[0] == "base" and 2 * key[1] + key[2] == t:
            yield ("base", key[1], key[2])
    for key in _catalog():
        if key == ("t_sequence", t):
            yield key


def t_sequences(t, existence=False):
    """T-sequences of length t: four disjoint-support ternary rows whose
    autocorrelations sum to zero, resolved from the sequence catalogs."""
    if t < 1:
        raise ValueError("length must be >= 1")
    if t == 1:
        fam = SeqFamily("t_sequence", ((1,), (0,), (0,), (0,)), {"t": 1})
        return True if existence else fam
    for src in _t_sources(t):
        if src[0] == "turyn":
            if not turyn_sequences(src[1], existence=True):
                continue
            if existence:
                return True
            try:
                members = _t_from_turyn(turyn_sequences(src[1]))
            except CatalogError:
                continue
        elif src[0] == "base":
            if not base_sequences(src[1], src[2], existence=True):
                continue
            if existence:
                return True
            try:
                members = _t_from_base(base_sequences(src[1], src[2]))
            except CatalogError:
                continue
        else:
            if existence:
                return True
            members = _catalog()[src].members
        fam = SeqFamily("t_sequence", members, {"t": t})
        if not check_family(fam):
            raise CatalogError("derived T-sequences of length %d fail verification" % t)
        return fam
    if existence:
        return False
    raise ValueError("T-sequences of length %d are not reachable from the catalogs" % t)


def reachable_t_lengths(limit):
    """All t <= limit for which t_sequences can currently be built."""
    return [t for t in range(1, limit + 1) if t_sequences(t, existence=True)]

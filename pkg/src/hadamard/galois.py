"""Arithmetic in GF(p^m): field contexts, primitive polynomials and elements,
quadratic characters, power residues, and the symmetric element ordering used
by the Paley-type constructions.

Elements are coefficient vectors of the quotient-ring representative, stored
as tuples ``(c0, c1, ..., c_{m-1})`` with ``c_i`` reduced mod p (constant term
first).  Equality is vector equality; FieldCtx instances are immutable and
every operation is pure, so concurrent use is safe.

Extension-field moduli are chosen by a seeded search over random monic
irreducible polynomials, so a given q always yields the same field.
"""

import functools
import random

__all__ = [
    "field", "FieldCtx", "FieldElem",
    "find_primitive_poly", "primitive_element",
    "quadratic_character", "power_residues", "ordered_elements",
    "is_prime", "is_prime_power", "factorize",
]


def factorize(n):
    """Prime factorization by trial division, as a {prime: exponent} dict."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n):
    return n >= 2 and factorize(n) == {n: 1}


def is_prime_power(q):
    """Return (p, m) with q = p^m, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    (p, m), = f.items()
    return p, m


class FieldElem:
    """Element of GF(p^m), represented by its coefficient vector."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, FieldElem) or other.ctx is not self.ctx:
            raise TypeError("operands belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElem(self.ctx, self.ctx._add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElem(self.ctx, self.ctx._sub(self.coeffs, other.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElem(self.ctx, self.ctx._mul(self.coeffs, other.coeffs))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx._neg(self.coeffs))

    def __pow__(self, e):
        return FieldElem(self.ctx, self.ctx._pow(self.coeffs, e))

    def inverse(self):
        if not self:
            raise ZeroDivisionError("0 has no inverse")
        return FieldElem(self.ctx, self.ctx._pow(self.coeffs, self.ctx.q - 2))

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __eq__(self, other):
        return (isinstance(other, FieldElem) and other.ctx is self.ctx
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def multiplicative_order(self):
        """Order in the multiplicative group (the element must be nonzero)."""
        if not self:
            raise ZeroDivisionError("0 has no multiplicative order")
        order = self.ctx.q - 1
        for r in factorize(order):
            while order % r == 0 and self.ctx._pow(self.coeffs, order // r) == self.ctx._one:
                order //= r
        return order

    def __repr__(self):
        if self.ctx.m == 1:
            return "GF(%d)(%d)" % (self.ctx.q, self.coeffs[0])
        return "GF(%d)%r" % (self.ctx.q, list(self.coeffs))


class FieldCtx:
    """Context for GF(p^m): modulus polynomial plus raw coefficient arithmetic."""

    def __init__(self, p, m, modulus):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus  # (c0, ..., c_{m-1}, 1), monic over GF(p)
        self._zero = (0,) * m
        self._one = (1,) + (0,) * (m - 1)

    # raw coefficient-tuple arithmetic -------------------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        p, m = self.p, self.m
        if m == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        mod = self.modulus
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(m):
                    prod[k - m + j] -= c * mod[j]
            prod[k] = 0
        return tuple(v % p for v in prod[:m])

    def _pow(self, a, e):
        if e < 0:
            raise ValueError("negative exponent; use inverse() explicitly")
        result = self._one
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    # element construction and enumeration ---------------------------------

    def element(self, coeffs):
        """Build an element from an int (prime subfield) or coefficient list."""
        if isinstance(coeffs, int):
            coeffs = (coeffs,) + (0,) * (self.m - 1)
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.m:
            raise ValueError("expected %d coefficients" % self.m)
        return FieldElem(self, coeffs)

    @property
    def zero(self):
        return FieldElem(self, self._zero)

    @property
    def one(self):
        return FieldElem(self, self._one)

    def elements(self):
        """All q elements, constant coefficient varying fastest."""
        out = []
        for i in range(self.q):
            coeffs = []
            v = i
            for _ in range(self.m):
                coeffs.append(v % self.p)
                v //= self.p
            out.append(FieldElem(self, tuple(coeffs)))
        return out

    def __repr__(self):
        return "FieldCtx(GF(%d))" % self.q


# polynomial helpers over an arbitrary FieldCtx --------------------------
# Polynomials are lists of raw coefficient tuples, constant term first,
# normalized so the last entry is nonzero (the zero polynomial is []).


def _pnorm(ctx, f):
    while f and f[-1] == ctx._zero:
        f.pop()
    return f


def _pmod(ctx, f, g):
    f = list(f)
    dg = len(g) - 1
    inv_lead = ctx._pow(g[-1], ctx.q - 2)
    while len(f) - 1 >= dg and f:
        if f[-1] == ctx._zero:
            f.pop()
            continue
        c = ctx._mul(f[-1], inv_lead)
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = ctx._sub(f[shift + i], ctx._mul(c, gi))
        f.pop()
    return _pnorm(ctx, f)


def _pmulmod(ctx, a, b, g):
    prod = [ctx._zero] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai != ctx._zero:
            for j, bj in enumerate(b):
                prod[i + j] = ctx._add(prod[i + j], ctx._mul(ai, bj))
    return _pmod(ctx, prod, g)


def _ppowmod(ctx, a, e, g):
    result = [ctx._one]
    base = _pmod(ctx, list(a), g)
    while e:
        if e & 1:
            result = _pmulmod(ctx, result, base, g)
        base = _pmulmod(ctx, base, base, g)
        e >>= 1
    return result


def _pgcd(ctx, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(ctx, a, b)
    return a


def _x_poly(ctx):
    return [ctx._zero, ctx._one]


def _is_irreducible(ctx, f):
    """Rabin irreducibility test for a monic polynomial over GF(q)."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = _x_poly(ctx)
    if _ppowmod(ctx, x, ctx.q ** n, f) != _pmod(ctx, list(x), f):
        return False
    for r in factorize(n):
        d = n // r
        xqd = _ppowmod(ctx, x, ctx.q ** d, f)
        diff = [ctx._zero] * max(len(xqd), 2)
        for i, c in enumerate(xqd):
            diff[i] = c
        diff[1] = ctx._sub(diff[1], ctx._one)
        g = _pgcd(ctx, f, _pnorm(ctx, diff))
        if len(g) - 1 > 0:
            return False
    return True


def _is_primitive(ctx, f):
    """True iff the monic irreducible f has a primitive root (x generates)."""
    n = len(f) - 1
    order = ctx.q ** n - 1
    x = _x_poly(ctx)
    if f[0] == ctx._zero:  # divisible by x
        return False
    for r in factorize(order):
        if _ppowmod(ctx, x, order // r, f) == [ctx._one]:
            return False
    return True


def find_primitive_poly(ctx, n, seed=0):
    """Monic primitive polynomial of degree n over ctx, by seeded random search.

    Returns the coefficients as a tuple of FieldElem, constant term first.
    The search draws random monic irreducibles until a primitive one is found;
    the fixed seed makes the answer reproducible.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    rng = random.Random(seed * 0x9E3779B1 + ctx.q * 1000003 + n)
    elems = [e.coeffs for e in ctx.elements()]
    while True:
        f = [rng.choice(elems[1:])] + [rng.choice(elems) for _ in range(n - 1)] + [ctx._one]
        if _is_irreducible(ctx, f) and _is_primitive(ctx, f):
            return tuple(FieldElem(ctx, c) for c in f)


@functools.lru_cache(maxsize=None)
def field(q):
    """Field context for GF(q); raises ValueError if q is not a prime power."""
    pm = is_prime_power(q)
    if pm is None:
        raise ValueError("%d is not a prime power" % q)
    p, m = pm
    if m == 1:
        return FieldCtx(p, 1, (0, 1))
    base = field(p)
    rng = random.Random(q * 7919 + m)
    ints = list(range(p))
    while True:
        f = [(rng.choice(ints[1:]),)] + [(rng.choice(ints),) for _ in range(m - 1)] + [base._one]
        if _is_irreducible(base, f):
            return FieldCtx(p, m, tuple(c[0] for c in f))


def primitive_element(ctx):
    """First element (in enumeration order) of multiplicative order q - 1."""
    for e in ctx.elements():
        if e and e.multiplicative_order() == ctx.q - 1:
            return e
    raise RuntimeError("no primitive element found (impossible in a field)")


def quadratic_character(ctx, x):
    """0 for x = 0, +1 for a nonzero square, -1 otherwise.  Odd q only."""
    if ctx.p == 2:
        raise ValueError("quadratic character needs odd characteristic")
    if isinstance(x, int):
        x = ctx.element(x)
    if not x:
        return 0
    return 1 if ctx._pow(x.coeffs, (ctx.q - 1) // 2) == ctx._one else -1


def power_residues(ctx, k):
    """The set { x^k : x nonzero }, of size (q-1)/k; k must divide q - 1."""
    if k < 1 or (ctx.q - 1) % k != 0:
        raise ValueError("%d does not divide q - 1 = %d" % (k, ctx.q - 1))
    seen = {}
    for e in ctx.elements():
        if e:
            seen[ctx._pow(e.coeffs, k)] = None
    return {FieldElem(ctx, c) for c in seen}


def ordered_elements(ctx):
    """Elements a_0..a_{q-1} with a_0 = 0 and a_{q-i} = -a_i (odd q only).

    For a prime field this is simply 0, 1, ..., p-1; for extensions one
    representative per {x, -x} pair is taken in enumeration order.
    """
    if ctx.p == 2:
        raise ValueError("symmetric ordering needs odd characteristic")
    q = ctx.q
    if ctx.m == 1:
        return [ctx.element(i) for i in range(q)]
    out = [None] * q
    out[0] = ctx.zero
    i = 1
    used = set()
    for e in ctx.elements():
        if not e or e.coeffs in used:
            continue
        neg = -e
        out[i] = e
        out[q - i] = neg
        used.add(e.coeffs)
        used.add(neg.coeffs)
        i += 1
        if i > (q - 1) // 2:
            break
    return out

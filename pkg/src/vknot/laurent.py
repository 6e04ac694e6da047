"""Exact sparse Laurent polynomials in one variable A and in two variables s, t.

Coefficients are Python ints; no zero coefficients are ever stored.  Both
classes are value types: immutable after construction, hashable, comparable.
"""

from fractions import Fraction
from math import gcd as _int_gcd


def _clean(d):
    return {k: c for k, c in d.items() if c}


class LaurentPoly1:
    """Integer Laurent polynomial in a single variable (printed as A by
    default; the display name is presentation only and is ignored by
    equality and hashing)."""

    __slots__ = ("_c", "_v")

    def __init__(self, coeffs=None, variable="A"):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = _clean(dict(coeffs))
        self._v = variable

    @classmethod
    def monomial(cls, exp, coeff=1, variable="A"):
        return cls({exp: coeff}, variable)

    @property
    def variable(self):
        return self._v

    def items(self):
        return sorted(self._c.items())

    def coeff(self, exp):
        return self._c.get(exp, 0)

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1(other)
        return isinstance(other, LaurentPoly1) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1(other)
        d = dict(self._c)
        for k, c in other._c.items():
            d[k] = d.get(k, 0) + c
        return LaurentPoly1(d, self._v)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly1({k: -c for k, c in self._c.items()}, self._v)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1(other)
        d = {}
        for k1, c1 in self._c.items():
            for k2, c2 in other._c.items():
                k = k1 + k2
                d[k] = d.get(k, 0) + c1 * c2
        return LaurentPoly1(d, self._v)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            # only monomials are invertible
            if len(self._c) != 1:
                raise ValueError("negative power of a non-monomial")
            (k, c), = self._c.items()
            if c * c != 1:
                raise ValueError("non-unit coefficient")
            return LaurentPoly1({-k: c}, self._v) ** (-n)
        out = LaurentPoly1(1, self._v)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def min_exp(self):
        return min(self._c)

    def max_exp(self):
        return max(self._c)

    def span(self):
        return 0 if not self._c else max(self._c) - min(self._c)

    def evaluate(self, a0):
        return sum(Fraction(c) * Fraction(a0) ** k for k, c in self._c.items())

    def to_pairs(self):
        return [[k, c] for k, c in self.items()]

    @classmethod
    def from_pairs(cls, pairs):
        return cls({int(k): int(c) for k, c in pairs})

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k, c in self.items():
            if k == 0:
                body = str(abs(c))
            else:
                var = self._v if k == 1 else "%s^%d" % (self._v, k)
                body = var if abs(c) == 1 else "%d*%s" % (abs(c), var)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "LaurentPoly1(%r)" % (self._c,)


class LaurentPoly2:
    """Integer Laurent polynomial in two variables (printed as s and t).

    Keys are (s-exponent, t-exponent) pairs.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {(0, 0): coeffs}
        self._c = _clean(dict(coeffs))

    @classmethod
    def monomial(cls, es, et, coeff=1):
        return cls({(es, et): coeff})

    def items(self):
        return sorted(self._c.items())

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2(other)
        return isinstance(other, LaurentPoly2) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2(other)
        d = dict(self._c)
        for k, c in other._c.items():
            d[k] = d.get(k, 0) + c
        return LaurentPoly2(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2(other)
        d = {}
        for (a1, b1), c1 in self._c.items():
            for (a2, b2), c2 in other._c.items():
                k = (a1 + a2, b1 + b2)
                d[k] = d.get(k, 0) + c1 * c2
        return LaurentPoly2(d)

    __rmul__ = __mul__

    def term_count(self):
        return len(self._c)

    def min_exps(self):
        return (min(a for a, _ in self._c), min(b for _, b in self._c))

    def shift(self, ds, dt):
        return LaurentPoly2({(a + ds, b + dt): c for (a, b), c in self._c.items()})

    def canonical(self):
        """Canonical representative modulo units +/- s^i t^j.

        Minimal exponents shifted to zero; lexicographically-least term made
        positive.
        """
        if not self._c:
            return LaurentPoly2()
        ms, mt = self.min_exps()
        p = self.shift(-ms, -mt)
        least = min(p._c)
        if p._c[least] < 0:
            p = -p
        return p

    def evaluate(self, s0, t0):
        s0, t0 = Fraction(s0), Fraction(t0)
        return sum(Fraction(c) * s0 ** a * t0 ** b for (a, b), c in self._c.items())

    def to_pairs(self):
        return [[a, b, c] for (a, b), c in self.items()]

    @classmethod
    def from_pairs(cls, triples):
        return cls({(int(a), int(b)): int(c) for a, b, c in triples})

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for (a, b), c in self.items():
            factors = []
            if a:
                factors.append("s" if a == 1 else "s^%d" % a)
            if b:
                factors.append("t" if b == 1 else "t^%d" % b)
            if abs(c) != 1 or not factors:
                factors.insert(0, str(abs(c)))
            body = "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "LaurentPoly2(%r)" % (self._c,)


def lp2_divexact(f, g):
    """Exact quotient f/g in the two-variable Laurent ring, or None.

    Valid as a divisibility test: if g divides f the leading-term reduction
    below never gets stuck and terminates with remainder zero.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return LaurentPoly2()
    # in an integral domain valuations are additive, so any exact quotient has
    # componentwise exponents within [min(f)-min(g), max(f)-max(g)]
    fms, fmt = f.min_exps()
    gms, gmt = g.min_exps()
    lo = (fms - gms, fmt - gmt)
    gl = max(g._c)  # lex-leading key
    glc = g._c[gl]
    rem = dict(f._c)
    quo = {}
    while rem:
        fl = max(rem)
        flc = rem[fl]
        if flc % glc:
            return None
        k = (fl[0] - gl[0], fl[1] - gl[1])
        if k[0] < lo[0] or k[1] < lo[1]:
            return None
        c = flc // glc
        quo[k] = quo.get(k, 0) + c
        for (a, b), gc in g._c.items():
            kk = (a + k[0], b + k[1])
            nv = rem.get(kk, 0) - c * gc
            if nv:
                rem[kk] = nv
            elif kk in rem:
                del rem[kk]
    return LaurentPoly2(quo)


# ---------------------------------------------------------------------------
# gcd in Q[s,t] via subresultants (primitive polynomial remainder sequences),
# returned as a primitive integer Laurent polynomial in canonical unit form.
# Internally we use a dense recursive representation: a polynomial in t whose
# coefficients are dense int lists in s.

def _zx_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _zx_add(p, q):
    n = max(len(p), len(q))
    return _zx_trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                     for i in range(n)])


def _zx_neg(p):
    return [-c for c in p]


def _zx_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _zx_trim(out)


def _zx_scale(p, c):
    return [] if c == 0 else [a * c for a in p]


def _zx_content(p):
    g = 0
    for c in p:
        g = _int_gcd(g, abs(c))
    return g


def _zx_divexact_int(p, c):
    return [a // c for a in p]


def _zx_pseudo_rem(a, b):
    """Pseudo-remainder of dense int polys a, b (b nonzero)."""
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b) and a:
        if a[-1] == 0:
            a.pop()
            continue
        la = a[-1]
        shift = len(a) - len(b)
        a = _zx_trim([c * lb for c in a])
        for i, bc in enumerate(b):
            a[i + shift] -= la * bc
        a = _zx_trim(a)
    return a


def _zx_gcd(p, q):
    p, q = _zx_trim(list(p)), _zx_trim(list(q))
    if not p:
        return q if not q or q[-1] > 0 else _zx_neg(q)
    if not q:
        return p if p[-1] > 0 else _zx_neg(p)
    cp, cq = _zx_content(p), _zx_content(q)
    a = _zx_divexact_int(p, cp)
    b = _zx_divexact_int(q, cq)
    while b:
        r = _zx_pseudo_rem(a, b)
        cr = _zx_content(r)
        a, b = b, (_zx_divexact_int(r, cr) if cr else [])
    g = _zx_scale(a, _int_gcd(cp, cq))
    return g if g[-1] > 0 else _zx_neg(g)


def _zxt_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _zxt_content(p):
    g = []
    for c in p:
        g = _zx_gcd(g, c)
    return g


def _zx_divexact(p, d):
    """Exact division of dense int polys; assumes divisibility."""
    p = list(p)
    out = [0] * max(len(p) - len(d) + 1, 0)
    while p:
        if p[-1] == 0:
            p.pop()
            continue
        shift = len(p) - len(d)
        c = p[-1] // d[-1]
        out[shift] = c
        for i, dc in enumerate(d):
            p[i + shift] -= c * dc
        p = _zx_trim(p)
    return _zx_trim(out)


def _zxt_primitive(p):
    c = _zxt_content(p)
    if not c or c == [1]:
        return [list(a) for a in p], c
    return [_zx_divexact(a, c) for a in p], c


def _zxt_pseudo_rem(a, b):
    a = [list(c) for c in a]
    lb = b[-1]
    while len(a) >= len(b) and a:
        if not a[-1]:
            a.pop()
            continue
        la = a[-1]
        shift = len(a) - len(b)
        a = [_zx_mul(c, lb) for c in a]
        for i, bc in enumerate(b):
            a[i + shift] = _zx_add(a[i + shift], _zx_neg(_zx_mul(la, bc)))
        a = _zxt_trim(a)
    return a


def _lp2_to_zxt(p):
    ms, mt = p.min_exps()
    q = p.shift(-ms, -mt)
    dt = max(b for _, b in q._c)
    ds = max(a for a, _ in q._c)
    out = [[0] * (ds + 1) for _ in range(dt + 1)]
    for (a, b), c in q._c.items():
        out[b][a] = c
    return [_zx_trim(row) for row in out]


def _zxt_to_lp2(p):
    d = {}
    for b, row in enumerate(p):
        for a, c in enumerate(row):
            if c:
                d[(a, b)] = c
    return LaurentPoly2(d)


def lp2_gcd(f, g):
    """gcd of two Laurent polynomials, canonical primitive representative."""
    if f.is_zero():
        return g.canonical()
    if g.is_zero():
        return f.canonical()
    a = _zxt_trim(_lp2_to_zxt(f))
    b = _zxt_trim(_lp2_to_zxt(g))
    ca = _zxt_content(a)
    cb = _zxt_content(b)
    a, _ = _zxt_primitive(a)
    b, _ = _zxt_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _zxt_pseudo_rem(a, b)
        r, _ = _zxt_primitive(r)
        a, b = b, r
    cont = _zx_gcd(ca, cb)
    result = [_zx_mul(c, cont) for c in a]
    return _zxt_to_lp2(result).canonical()


def lp2_gcd_many(polys):
    g = LaurentPoly2()
    one = LaurentPoly2(1)
    for p in polys:
        g = lp2_gcd(g, p)
        if g == one:
            return g
    return g


def lp2_divides(d, f):
    """True iff d divides f in the Laurent ring (up to units)."""
    if d.is_zero():
        return f.is_zero()
    return lp2_divexact(f, d) is not None

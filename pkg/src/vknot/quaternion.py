"""Quaternionic biquandle invariants: switch relations, Study determinant,
codimension-1 gcd.

The linear biquandle is given by the switch matrix
    S = ((1+i, j*t), (-j*t^-1, 1+i)),   t central,
so with S(a,b) = (b_a, a^b):
    a^b = -j*t^-1 * a + (1+i) * b,      a_b = j*t * a + (1+i) * b,
and the inverse switch supplies the barred (negative-crossing) forms:
    a^(b bar) = -j*t * a + (1-i) * b,   a_(b bar) = j*t^-1 * a + (1-i) * b.

The Study determinant maps each quaternionic entry q = z1 + z2*j (z1, z2
complex) to the 2x2 complex block ((z1, z2), (-conj z2, conj z1)) and takes
the ordinary determinant of the doubled matrix, all over Gaussian-integer
Laurent polynomials in t.
"""

import itertools
from fractions import Fraction

from .biracks import _code_edges, _crossing_relations
from .errors import EmptyCode
from .laurent import LaurentPoly1
from .linalg import Ring, bareiss_det


class IntegerQuaternion:
    """Quaternion w + x*i + y*j + z*k with exact coefficients.

    Coefficients are integers in normal use; exact Fractions are accepted
    for specialization checks.
    """

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    def __setattr__(self, name, value):
        raise AttributeError("IntegerQuaternion is immutable")

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntegerQuaternion(other)
        return (isinstance(other, IntegerQuaternion)
                and (self.w, self.x, self.y, self.z)
                == (other.w, other.x, other.y, other.z))

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def is_zero(self):
        return not (self.w or self.x or self.y or self.z)

    def __add__(self, other):
        return IntegerQuaternion(self.w + other.w, self.x + other.x,
                                 self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return IntegerQuaternion(self.w - other.w, self.x - other.x,
                                 self.y - other.y, self.z - other.z)

    def __neg__(self):
        return IntegerQuaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return IntegerQuaternion(self.w * other, self.x * other,
                                     self.y * other, self.z * other)
        a, b, c, d = self.w, self.x, self.y, self.z
        e, f, g, h = other.w, other.x, other.y, other.z
        return IntegerQuaternion(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def conj(self):
        return IntegerQuaternion(self.w, -self.x, -self.y, -self.z)

    def __str__(self):
        parts = []
        for c, unit in ((self.w, ""), (self.x, "i"), (self.y, "j"),
                        (self.z, "k")):
            if not c:
                continue
            body = (str(abs(c)) if (abs(c) != 1 or not unit) else "") + unit
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("-" if c < 0 else "+") + body)
        return "".join(parts) or "0"

    def __repr__(self):
        return "IntegerQuaternion(%r, %r, %r, %r)" % (
            self.w, self.x, self.y, self.z)


Q_ZERO = IntegerQuaternion()
Q_ONE = IntegerQuaternion(1)
Q_I = IntegerQuaternion(0, 1)
Q_J = IntegerQuaternion(0, 0, 1)
Q_K = IntegerQuaternion(0, 0, 0, 1)


class QuatLaurent:
    """Laurent polynomial in a central variable t with quaternion coeffs."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, IntegerQuaternion):
            coeffs = {0: coeffs}
        elif isinstance(coeffs, int):
            coeffs = {0: IntegerQuaternion(coeffs)}
        self._c = {k: q for k, q in dict(coeffs).items() if not q.is_zero()}

    @classmethod
    def monomial(cls, exp, q):
        return cls({exp: q})

    def items(self):
        return sorted(self._c.items())

    def is_zero(self):
        return not self._c

    def __eq__(self, other):
        return isinstance(other, QuatLaurent) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        d = dict(self._c)
        for k, q in other._c.items():
            d[k] = d.get(k, Q_ZERO) + q
        return QuatLaurent(d)

    def __neg__(self):
        return QuatLaurent({k: -q for k, q in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        d = {}
        for k1, q1 in self._c.items():
            for k2, q2 in other._c.items():
                k = k1 + k2
                d[k] = d.get(k, Q_ZERO) + q1 * q2
        return QuatLaurent(d)

    def evaluate(self, t0):
        """Specialize t to an exact nonzero rational."""
        t0 = Fraction(t0)
        out = IntegerQuaternion(Fraction(0), Fraction(0), Fraction(0),
                                Fraction(0))
        for k, q in self._c.items():
            out = out + q * (t0 ** k)
        return out

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k, q in self.items():
            tpart = "" if k == 0 else ("t" if k == 1 else "t^%d" % k)
            qs = str(q)
            body = ("(%s)" % qs if ("+" in qs[1:] or "-" in qs[1:]) else qs)
            parts.append(body + ("*" + tpart if tpart else ""))
        return " + ".join(parts)

    def __repr__(self):
        return "QuatLaurent(%r)" % (self._c,)


class QuatMatrix:
    """Rectangular matrix of QuatLaurent entries."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        object.__setattr__(self, "entries",
                           tuple(tuple(row) for row in entries))

    def __setattr__(self, name, value):
        raise AttributeError("QuatMatrix is immutable")

    @property
    def dimension(self):
        return len(self.entries)


# switch coefficients
_UP_A = QuatLaurent.monomial(-1, -Q_J)          # a^b: -j t^-1 on a
_UP_B = QuatLaurent(Q_ONE + Q_I)                # a^b: 1+i on b
_DOWN_A = QuatLaurent.monomial(1, Q_J)          # a_b: j t on a
_DOWN_B = QuatLaurent(Q_ONE + Q_I)
_UPBAR_A = QuatLaurent.monomial(1, -Q_J)        # a^(b bar): -j t on a
_UPBAR_B = QuatLaurent(Q_ONE - Q_I)
_DOWNBAR_A = QuatLaurent.monomial(-1, Q_J)      # a_(b bar): j t^-1 on a
_DOWNBAR_B = QuatLaurent(Q_ONE - Q_I)

_QL_ONE = QuatLaurent(Q_ONE)


def switch_matrix():
    """The 2x2 switch matrix ((1+i, jt), (-j t^-1, 1+i))."""
    return QuatMatrix([
        [QuatLaurent(Q_ONE + Q_I), QuatLaurent.monomial(1, Q_J)],
        [QuatLaurent.monomial(-1, -Q_J), QuatLaurent(Q_ONE + Q_I)],
    ])


def switch_matrix_bar():
    """Inverse of the switch matrix (verified S * S_bar = 1)."""
    return QuatMatrix([
        [QuatLaurent(Q_ONE - Q_I), QuatLaurent.monomial(1, -Q_J)],
        [QuatLaurent.monomial(-1, Q_J), QuatLaurent(Q_ONE - Q_I)],
    ])


def quaternionic_relations(code):
    """2n x 2n presentation matrix with the quaternionic linear forms.

    Same row/column conventions as the Alexander relation matrix: rows are
    (under-out, over-out) per crossing ordered by first passage, columns
    are diagram edges in code-position order.
    """
    if code.n == 0:
        raise EmptyCode("relation matrix needs at least one crossing")
    edges, _ = _code_edges(code)
    edge_ix = {e: i for i, e in enumerate(edges)}
    dim = len(edges)
    occ = code.occurrences()
    first_pos = {ch: min((ci, ti) for ci, ti, _ in occ[ch]) for ch in occ}
    order = sorted(occ, key=lambda ch: first_pos[ch])
    by_chord = dict(zip(sorted(occ), _crossing_relations(code, None)))
    rows = []
    for chord in order:
        a, b, c, d, pos = by_chord[chord]
        r1 = [QuatLaurent() for _ in range(dim)]
        r2 = [QuatLaurent() for _ in range(dim)]
        if pos:
            ca, cb = _UP_A, _UP_B          # c = a^b
            da, db = _DOWN_B, _DOWN_A      # d = b_a: coeff on a is the
            # "on b" slot of the lower operation and vice versa
        else:
            ca, cb = _UPBAR_A, _UPBAR_B
            da, db = _DOWNBAR_B, _DOWNBAR_A
        r1[edge_ix[c]] = r1[edge_ix[c]] + _QL_ONE
        r1[edge_ix[a]] = r1[edge_ix[a]] - ca
        r1[edge_ix[b]] = r1[edge_ix[b]] - cb
        r2[edge_ix[d]] = r2[edge_ix[d]] + _QL_ONE
        r2[edge_ix[a]] = r2[edge_ix[a]] - da
        r2[edge_ix[b]] = r2[edge_ix[b]] - db
        rows.append(r1)
        rows.append(r2)
    return QuatMatrix(rows)


# ---------------------------------------------------------------------------
# Gaussian-integer Laurent polynomials (the commutative ring where the
# Study determinant lives); coefficients are (re, im) int pairs.

class GaussianLaurent:
    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: (coeffs, 0)}
        self._c = {k: (re, im) for k, (re, im) in dict(coeffs).items()
                   if re or im}

    @classmethod
    def monomial(cls, exp, re, im=0):
        return cls({exp: (re, im)})

    def items(self):
        return sorted(self._c.items())

    def is_zero(self):
        return not self._c

    def __eq__(self, other):
        if isinstance(other, int):
            other = GaussianLaurent(other)
        return isinstance(other, GaussianLaurent) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        d = dict(self._c)
        for k, (re, im) in other._c.items():
            a, b = d.get(k, (0, 0))
            d[k] = (a + re, b + im)
        return GaussianLaurent(d)

    def __neg__(self):
        return GaussianLaurent({k: (-re, -im)
                                for k, (re, im) in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        d = {}
        for k1, (a, b) in self._c.items():
            for k2, (c, e) in other._c.items():
                k = k1 + k2
                re, im = d.get(k, (0, 0))
                d[k] = (re + a * c - b * e, im + a * e + b * c)
        return GaussianLaurent(d)

    def conj(self):
        return GaussianLaurent({k: (re, -im)
                                for k, (re, im) in self._c.items()})

    def term_count(self):
        return len(self._c)

    def is_real_integer(self):
        return all(im == 0 for _, im in self._c.values())

    def to_int_laurent(self):
        assert self.is_real_integer()
        return LaurentPoly1({k: re for k, (re, _) in self._c.items()})

    def evaluate(self, t0):
        t0 = Fraction(t0)
        re = im = Fraction(0)
        for k, (a, b) in self._c.items():
            re += a * t0 ** k
            im += b * t0 ** k
        return (re, im)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k, (re, im) in self.items():
            if im == 0:
                cs = str(re)
            elif re == 0:
                cs = "%di" % im
            else:
                cs = "(%d%+di)" % (re, im)
            tpart = "" if k == 0 else ("t" if k == 1 else "t^%d" % k)
            parts.append(cs + ("*" + tpart if tpart else ""))
        return " + ".join(parts)

    def __repr__(self):
        return "GaussianLaurent(%r)" % (self._c,)


def _gauss_divexact(f, g):
    """Exact division in the Gaussian-integer Laurent ring (Bareiss steps)."""
    if g.is_zero():
        raise ZeroDivisionError
    if f.is_zero():
        return GaussianLaurent()
    lo = min(f._c) - min(g._c)
    gl = max(g._c)
    ga, gb = g._c[gl]
    gn = ga * ga + gb * gb
    rem = dict(f._c)
    quo = {}
    while rem:
        fl = max(rem)
        fa, fb = rem[fl]
        # (fa+fb i) / (ga+gb i)
        re_num = fa * ga + fb * gb
        im_num = fb * ga - fa * gb
        if re_num % gn or im_num % gn:
            raise ArithmeticError("non-exact Gaussian division")
        k = fl - gl
        if k < lo:
            raise ArithmeticError("non-exact Laurent division")
        c = (re_num // gn, im_num // gn)
        qa, qb = quo.get(k, (0, 0))
        quo[k] = (qa + c[0], qb + c[1])
        for kk, (a, b) in g._c.items():
            pos = kk + k
            ra, rb = rem.get(pos, (0, 0))
            ra -= c[0] * a - c[1] * b
            rb -= c[0] * b + c[1] * a
            if ra or rb:
                rem[pos] = (ra, rb)
            elif pos in rem:
                del rem[pos]
    return GaussianLaurent(quo)


GAUSS_RING = Ring(
    zero=GaussianLaurent(), one=GaussianLaurent(1),
    add=lambda a, b: a + b, sub=lambda a, b: a - b,
    mul=lambda a, b: a * b, divexact=_gauss_divexact,
    is_zero=lambda a: a.is_zero(), size=lambda a: a.term_count(),
)


def _complex_adjoint(m):
    """Double each quaternion entry q = z1 + z2 j into its complex block."""
    d = m.dimension
    out = [[GaussianLaurent() for _ in range(2 * d)] for _ in range(2 * d)]
    for r in range(d):
        for c in range(d):
            z1 = GaussianLaurent()
            z2 = GaussianLaurent()
            for k, q in m.entries[r][c].items():
                z1 = z1 + GaussianLaurent.monomial(k, q.w, q.x)
                z2 = z2 + GaussianLaurent.monomial(k, q.y, q.z)
            out[2 * r][2 * c] = z1
            out[2 * r][2 * c + 1] = z2
            out[2 * r + 1][2 * c] = -z2.conj()
            out[2 * r + 1][2 * c + 1] = z1.conj()
    return out


def study_det(m):
    """Determinant of the complex adjoint of a quaternionic matrix."""
    return bareiss_det(_complex_adjoint(m), GAUSS_RING)


# gcd in Q(i)[t]: monic Euclid with exact complex-rational coefficients

def _cx(a, b=0):
    return (Fraction(a), Fraction(b))


def _cx_mul(u, v):
    return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])


def _cx_div(u, v):
    n = v[0] * v[0] + v[1] * v[1]
    return ((u[0] * v[0] + u[1] * v[1]) / n, (u[1] * v[0] - u[0] * v[1]) / n)


def _poly_trim(p):
    while p and p[-1] == (0, 0):
        p.pop()
    return p


def _poly_rem(a, b):
    a = list(a)
    while len(a) >= len(b) and a:
        if a[-1] == (0, 0):
            a.pop()
            continue
        c = _cx_div(a[-1], b[-1])
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            prod = _cx_mul(c, bc)
            a[i + shift] = (a[i + shift][0] - prod[0],
                            a[i + shift][1] - prod[1])
        a = _poly_trim(a)
    return a


def _gl_to_poly(g):
    lo = min(g._c)
    hi = max(g._c)
    out = [(Fraction(0), Fraction(0))] * (hi - lo + 1)
    for k, (re, im) in g._c.items():
        out[k - lo] = _cx(re, im)
    return out


def codim1_gcd(m):
    """Primitive integer gcd of the Study determinants of all codimension-1
    submatrices, normalized to zero minimal exponent and positive least
    coefficient.  Fails loudly if the gcd is not real-integral after
    primitive scaling.
    """
    d = m.dimension
    g = None
    for r, c in itertools.product(range(d), repeat=2):
        rows = [i for i in range(d) if i != r]
        cols = [j for j in range(d) if j != c]
        sub = QuatMatrix([[m.entries[i][j] for j in cols] for i in rows])
        det = study_det(sub)
        if det.is_zero():
            continue
        p = _gl_to_poly(det)
        if g is None:
            g = p
        else:
            a, b = g, p
            while b:
                a, b = b, _poly_rem(a, b)
            g = a
        if len(g) == 1:
            break
    if g is None:
        return LaurentPoly1(variable="t")
    # scale to a primitive integer polynomial
    from math import gcd as igcd
    den = 1
    for re, im in g:
        den = den * re.denominator // igcd(den, re.denominator)
        den = den * im.denominator // igcd(den, im.denominator)
    ints = [(re * den, im * den) for re, im in g]
    # divide by Gaussian content: the gcd of Study determinants is real up
    # to units, so the reduction must land in Z[t]; fail loudly otherwise
    content = 0
    for re, im in ints:
        content = igcd(content, igcd(int(re), int(im)))
    ints = [(int(re) // content, int(im) // content) for re, im in ints]
    if any(im for _, im in ints):
        # try multiplying by i or by the conjugate-content unit
        if all(re == 0 for re, _ in ints):
            ints = [(im, 0) for _, im in ints]
        else:
            raise ArithmeticError("gcd is not real after primitive scaling")
    poly = LaurentPoly1({k: re for k, (re, _) in enumerate(ints) if re}, "t")
    if poly.is_zero():
        return poly
    poly = poly * LaurentPoly1.monomial(-poly.min_exp())
    if poly.coeff(poly.min_exp()) < 0:
        poly = -poly
    return poly

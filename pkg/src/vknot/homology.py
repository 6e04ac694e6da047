"""Birack (co)homology: cube complex, boundary maps, homology groups,
doubling construction, and the associated group of a birack.

Chains C_n are free abelian on words (a_1, ..., a_n) over the birack X.
The two face families are
    d_i^-(w) = w with a_i deleted,
    d_i^+(w) = (a_1^{a_i}, ..., a_{i-1}^{a_i}, a_{i+1 a_i}, ..., a_{n a_i}),
and the boundary is d = sum_i (-1)^i (d_i^- - d_i^+).  For biquandles the
degenerate subcomplex spanned by words with a_i = a_{i+1} is a subcomplex
and the quotient homology is also available.
"""

import itertools

from .errors import IndexOutOfRange, NotBiquandle, SizeCap
from .linalg import smith_invariant_factors

_BASIS_CAP = 20000


def face(birack, word, i, sign):
    """i-th face (1-based) of a word; sign is '-' or '+'."""
    n = len(word)
    if not 1 <= i <= n:
        raise IndexOutOfRange("face index %d out of 1..%d" % (i, n))
    j = i - 1
    if sign == "-":
        return word[:j] + word[j + 1:]
    ai = word[j]
    left = tuple(birack.up[a][ai] for a in word[:j])
    right = tuple(birack.down[a][ai] for a in word[j + 1:])
    return left + right


def cube_basis(birack, n):
    """All words of length n in lexicographic order."""
    count = birack.m ** n
    if count > _BASIS_CAP:
        raise SizeCap("basis of size %d exceeds cap %d" % (count, _BASIS_CAP))
    return list(itertools.product(range(birack.m), repeat=n))


def _is_degenerate(word):
    return any(word[i] == word[i + 1] for i in range(len(word) - 1))


def boundary_matrix(birack, n, variant="full"):
    """Integer matrix of d: C_n -> C_{n-1} over the chosen basis.

    variant "full" uses all words; "quotient" uses non-degenerate words of
    the degenerate-quotient complex (biquandles only).
    """
    if variant not in ("full", "quotient"):
        raise ValueError("variant must be 'full' or 'quotient'")
    if variant == "quotient" and not birack.is_biquandle:
        raise NotBiquandle("degenerate quotient needs a biquandle")
    src = cube_basis(birack, n)
    dst = cube_basis(birack, n - 1) if n >= 1 else []
    if variant == "quotient":
        src = [w for w in src if not _is_degenerate(w)]
        dst = [w for w in dst if not _is_degenerate(w)]
    dst_ix = {w: i for i, w in enumerate(dst)}
    mat = [[0] * len(src) for _ in range(len(dst))]
    for col, w in enumerate(src):
        for i in range(1, len(w) + 1):
            s = -1 if i % 2 else 1
            for fsign, coef in (("-", s), ("+", -s)):
                img = face(birack, w, i, fsign)
                row = dst_ix.get(img)
                if row is not None:
                    mat[row][col] += coef
    return mat, src, dst


def homology(birack, k, variant="full"):
    """H_k as (free rank, [torsion coefficients > 1]).

    Computed from Smith normal forms of the boundary matrices d_k and
    d_{k+1}: rank H_k = dim C_k - rank d_k - rank d_{k+1}; torsion comes
    from the invariant factors of d_{k+1}.
    """
    if k < 0:
        raise IndexOutOfRange("homological degree must be >= 0")
    if k == 0:
        dim_k = 1
        rank_k = 0
    else:
        dk, basis_k, _ = boundary_matrix(birack, k, variant)
        dim_k = len(basis_k)
        rank_k = (len(smith_invariant_factors(dk))
                  if dk and basis_k else 0)
    dk1, src1, _ = boundary_matrix(birack, k + 1, variant)
    factors = smith_invariant_factors(dk1) if dk1 and src1 else []
    rank_k1 = len(factors)
    free = dim_k - rank_k - rank_k1
    torsion = [abs(f) for f in factors if abs(f) > 1]
    return free, sorted(torsion)


def double_birack(birack):
    """Doubling: on pairs u = (a, c), v = (b, d) set
    u^v = (a^b, c^b) and u_v = (a_b, c^b).

    The result is a birack on m^2 elements whose operations depend only on
    the first coordinate of the acting element.
    """
    from .biracks import FiniteBirack

    m = birack.m
    mm = m * m
    up = [[0] * mm for _ in range(mm)]
    down = [[0] * mm for _ in range(mm)]
    for a, c in itertools.product(range(m), repeat=2):
        u = a * m + c
        for b, d in itertools.product(range(m), repeat=2):
            v = b * m + d
            up[u][v] = birack.up[a][b] * m + birack.up[c][b]
            down[u][v] = birack.down[a][b] * m + birack.up[c][b]
    return FiniteBirack(up, down)


def pi1_presentation(birack):
    """Associated group: generators x_a, relators x_a x_{b_a} = x_{a^b} x_b.

    Returns (generators, relators, text) with relators as reduced words of
    signed generator indices; also exposes the abelianization.
    """
    m = birack.m
    gens = ["x%d" % a for a in range(m)]
    relators = []
    seen = set()
    for a, b in itertools.product(range(m), repeat=2):
        word = _reduce_word([a + 1, birack.down[b][a] + 1,
                             -(birack.up[a][b] + 1), -(b + 1)])
        if not word:
            continue
        key = _cyclic_key(word)
        if key in seen or _cyclic_key(_invert_word(word)) in seen:
            continue
        seen.add(key)
        relators.append(tuple(word))
    text_rel = []
    for word in relators:
        text_rel.append("".join(
            gens[abs(g) - 1] + ("" if g > 0 else "^-1") for g in word))
    text = "< %s | %s >" % (", ".join(gens), ", ".join(text_rel) or "-")
    return gens, relators, text


def pi1_abelianization(birack):
    """(free rank, torsion) of the abelianized associated group."""
    gens, relators, _ = pi1_presentation(birack)
    m = len(gens)
    rows = []
    for word in relators:
        row = [0] * m
        for g in word:
            row[abs(g) - 1] += 1 if g > 0 else -1
        rows.append(row)
    if not rows:
        return m, []
    factors = smith_invariant_factors(rows)
    torsion = [abs(f) for f in factors if abs(f) > 1]
    return m - len(factors), sorted(torsion)


def _reduce_word(word):
    out = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    # cyclic reduction
    while len(out) >= 2 and out[0] == -out[-1]:
        out = out[1:-1]
    return out


def _invert_word(word):
    return [-g for g in reversed(word)]


def _cyclic_key(word):
    word = list(word)
    best = None
    for i in range(len(word)):
        rot = tuple(word[i:] + word[:i])
        if best is None or rot < best:
            best = rot
    return best

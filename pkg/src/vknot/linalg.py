"""Exact linear algebra: fraction-free determinants and integer Smith form.

The determinant routine is generic over a commutative-ring protocol so the
same code serves integer, two-variable Laurent, and Gaussian-integer Laurent
matrices.
"""


class Ring:
    """Bundle of ring operations for the generic elimination routines.

    divexact(a, b) must return the exact quotient whenever b is a previous
    Bareiss pivot (exactness is a theorem of the algorithm, not a runtime
    hope); size(a) is a pivot-selection heuristic (smaller is preferred).
    """

    def __init__(self, zero, one, add, sub, mul, divexact, is_zero,
                 size=None):
        self.zero = zero
        self.one = one
        self.add = add
        self.sub = sub
        self.mul = mul
        self.divexact = divexact
        self.is_zero = is_zero
        self.size = size or (lambda a: 1)


INT_RING = Ring(
    zero=0, one=1,
    add=lambda a, b: a + b,
    sub=lambda a, b: a - b,
    mul=lambda a, b: a * b,
    divexact=lambda a, b: a // b,
    is_zero=lambda a: a == 0,
    size=lambda a: abs(a),
)


def bareiss_det(matrix, ring):
    """Determinant by fraction-free Bareiss elimination.

    Exact in any integral domain given an exact-division routine; pivots are
    chosen by the ring's size heuristic, with row/column swaps tracked in the
    sign.
    """
    n = len(matrix)
    if n == 0:
        return ring.one
    a = [list(row) for row in matrix]
    sign = 1
    prev = ring.one
    for k in range(n):
        # pick the "smallest" nonzero pivot in the trailing submatrix
        best = None
        for i in range(k, n):
            for j in range(k, n):
                if not ring.is_zero(a[i][j]):
                    sz = ring.size(a[i][j])
                    if best is None or sz < best[0]:
                        best = (sz, i, j)
        if best is None:
            return ring.zero
        _, pi, pj = best
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ring.sub(ring.mul(pivot, a[i][j]),
                               ring.mul(a[i][k], a[k][j]))
                a[i][j] = ring.divexact(num, prev)
            a[i][k] = ring.zero
        prev = pivot
    d = a[n - 1][n - 1]
    if sign < 0:
        d = ring.sub(ring.zero, d)
    return d


def smith_invariant_factors(matrix):
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    Returns a list [d1, d2, ...] with d1 | d2 | ... and all di >= 1; the list
    length is the rank of the matrix.
    """
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    factors = []
    top = 0
    while top < rows and top < cols:
        # move the smallest nonzero entry of the trailing block to (top, top)
        pivot = None
        for i in range(top, rows):
            for j in range(top, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < pivot[0]):
                    pivot = (abs(a[i][j]), i, j)
        if pivot is None:
            break
        _, pi, pj = pivot
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        p = a[top][top]
        # each restart below strictly shrinks the smallest absolute nonzero
        # entry of the trailing block, so the reduction terminates
        if any(a[i][top] % p for i in range(top + 1, rows)):
            for i in range(top + 1, rows):
                if a[i][top] % p:
                    q = a[i][top] // p
                    for j in range(top, cols):
                        a[i][j] -= q * a[top][j]
                    break
            continue
        for i in range(top + 1, rows):
            if a[i][top]:
                q = a[i][top] // p
                for j in range(top, cols):
                    a[i][j] -= q * a[top][j]
        if any(a[top][j] % p for j in range(top + 1, cols)):
            for j in range(top + 1, cols):
                if a[top][j] % p:
                    q = a[top][j] // p
                    for i in range(top, rows):
                        a[i][j] -= q * a[i][top]
                    break
            continue
        for j in range(top + 1, cols):
            if a[top][j]:
                q = a[top][j] // p
                for i in range(top, rows):
                    a[i][j] -= q * a[i][top]
        # the pivot must divide the whole trailing block before it is final
        bad = next((i for i in range(top + 1, rows)
                    if any(a[i][j] % p for j in range(top + 1, cols))), None)
        if bad is not None:
            for j in range(top, cols):
                a[top][j] += a[bad][j]
            continue
        factors.append(abs(p))
        top += 1
    return factors


def integer_rank(matrix):
    return len(smith_invariant_factors(matrix))

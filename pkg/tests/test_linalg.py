import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import det_oracle, snf_oracle
from vknot.laurent import LaurentPoly2
from vknot.linalg import (INT_RING, Ring, bareiss_det, integer_rank,
                          smith_invariant_factors)

LP2_RING = Ring(
    zero=LaurentPoly2(), one=LaurentPoly2(1),
    add=lambda a, b: a + b, sub=lambda a, b: a - b, mul=lambda a, b: a * b,
    divexact=lambda a, b: __import__("vknot.laurent", fromlist=["x"])
    .lp2_divexact(a, b),
    is_zero=lambda a: a.is_zero(),
    size=lambda a: a.term_count(),
)


def rand_int_matrix(rng, n, m=None, lo=-6, hi=6):
    m = n if m is None else m
    return [[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)]


class TestBareiss:
    def test_empty_matrix(self):
        assert bareiss_det([], INT_RING) == 1

    def test_singular(self):
        assert bareiss_det([[1, 2], [2, 4]], INT_RING) == 0

    def test_matches_cofactor_oracle_integers(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randint(1, 6)
            m = rand_int_matrix(rng, n)
            assert bareiss_det(m, INT_RING) == det_oracle(m, 0, 1)

    def test_matches_cofactor_oracle_polynomials(self):
        rng = random.Random(4)
        for _ in range(30):
            n = rng.randint(1, 4)
            m = [[LaurentPoly2({(rng.randint(-1, 1), rng.randint(-1, 1)):
                                rng.randint(-2, 2)})
                  for _ in range(n)] for _ in range(n)]
            assert bareiss_det(m, LP2_RING) == det_oracle(
                m, LaurentPoly2(), LaurentPoly2(1))

    def test_multiplicativity_sampled(self):
        rng = random.Random(9)
        for _ in range(40):
            n = rng.randint(1, 4)
            a = rand_int_matrix(rng, n)
            b = rand_int_matrix(rng, n)
            ab = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
                  for i in range(n)]
            assert bareiss_det(ab, INT_RING) == (
                bareiss_det(a, INT_RING) * bareiss_det(b, INT_RING))


class TestSmith:
    def test_known_form(self):
        m = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
        assert smith_invariant_factors(m) == [2, 2, 156]

    def test_divisibility_chain_and_oracle(self):
        rng = random.Random(7)
        for _ in range(120):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            m = rand_int_matrix(rng, rows, cols)
            ours = smith_invariant_factors(m)
            assert ours == snf_oracle(m)
            for a, b in zip(ours, ours[1:]):
                assert b % a == 0

    def test_zero_matrix(self):
        assert smith_invariant_factors([[0, 0], [0, 0]]) == []
        assert integer_rank([[0, 0], [0, 0]]) == 0

    def test_rank_matches_rational_rank(self):
        rng = random.Random(8)
        for _ in range(60):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            m = rand_int_matrix(rng, rows, cols)
            # Gaussian elimination over Q as the independent rank
            a = [[Fraction(x) for x in row] for row in m]
            rank = 0
            for j in range(cols):
                piv = next((i for i in range(rank, rows) if a[i][j]), None)
                if piv is None:
                    continue
                a[rank], a[piv] = a[piv], a[rank]
                for i in range(rows):
                    if i != rank and a[i][j]:
                        f = a[i][j] / a[rank][j]
                        a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
                rank += 1
            assert integer_rank(m) == rank


@given(st.integers(1, 5), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_det_transpose_invariant(n, rnd):
    m = rand_int_matrix(rnd, n)
    mt = [list(col) for col in zip(*m)]
    assert bareiss_det(m, INT_RING) == bareiss_det(mt, INT_RING)

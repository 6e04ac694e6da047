import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vknot.laurent import (LaurentPoly1, LaurentPoly2, lp2_divexact,
                           lp2_divides, lp2_gcd, lp2_gcd_many)


def rand_lp1(rng, terms=4, span=4):
    return LaurentPoly1({rng.randint(-span, span): rng.randint(-5, 5)
                         for _ in range(terms)})


def rand_lp2(rng, terms=4, span=3):
    return LaurentPoly2({(rng.randint(-span, span), rng.randint(-span, span)):
                         rng.randint(-4, 4) for _ in range(terms)})


class TestPoly1:
    def test_str(self):
        p = LaurentPoly1({-2: 1, 0: -3, 1: 1})
        assert str(p) == "A^-2 - 3 + A"

    def test_display_variable(self):
        p = LaurentPoly1({2: 5}, "t")
        assert str(p) == "5*t^2"
        assert str(-p * p) == "-25*t^4"
        assert p == LaurentPoly1({2: 5})  # the name is presentation only

    def test_pow_negative_monomial(self):
        assert LaurentPoly1({3: -1}) ** -2 == LaurentPoly1({-6: 1})

    def test_pow_negative_nonmonomial_rejected(self):
        with pytest.raises(ValueError):
            LaurentPoly1({0: 1, 1: 1}) ** -1

    def test_span(self):
        assert LaurentPoly1({-4: 1, 8: 2}).span() == 12
        assert LaurentPoly1().span() == 0

    def test_evaluate(self):
        p = LaurentPoly1({-1: 1, 2: 3})
        assert p.evaluate(2) == Fraction(1, 2) + 12

    def test_pairs_roundtrip(self):
        p = LaurentPoly1({-1: 2, 5: -7})
        assert LaurentPoly1.from_pairs(p.to_pairs()) == p


class TestPoly2:
    def test_str(self):
        p = LaurentPoly2({(0, 0): 1, (1, 1): -1, (2, 0): 3})
        assert str(p) == "1 - s*t + 3*s^2"

    def test_canonical_kills_units(self):
        p = LaurentPoly2({(1, -2): -2, (2, -1): 6})
        q = p.canonical()
        assert q == (p * LaurentPoly2.monomial(3, 5, -1)).canonical()
        assert q.min_exps() == (0, 0)

    def test_evaluate(self):
        p = LaurentPoly2({(1, 0): 1, (0, -1): 1})
        assert p.evaluate(3, 2) == Fraction(7, 2)

    def test_pairs_roundtrip(self):
        p = LaurentPoly2({(-1, 2): 3, (0, 0): -1})
        assert LaurentPoly2.from_pairs(p.to_pairs()) == p


class TestDivision:
    def test_divexact_recovers_factor(self):
        rng = random.Random(5)
        for _ in range(200):
            f, g = rand_lp2(rng), rand_lp2(rng)
            if g.is_zero():
                continue
            q = lp2_divexact(f * g, g)
            assert q == f or (f.is_zero() and q.is_zero())

    def test_divexact_rejects_nondivisor(self):
        s = LaurentPoly2.monomial(1, 0)
        t = LaurentPoly2.monomial(0, 1)
        assert lp2_divexact(s + 1, t + 1) is None

    def test_divides(self):
        s = LaurentPoly2.monomial(1, 0)
        t = LaurentPoly2.monomial(0, 1)
        assert lp2_divides(s + 1, (s + 1) * (t - 3))
        assert not lp2_divides(s + 2, (s + 1) * (t - 3))


class TestGcd:
    def test_gcd_of_multiples(self):
        s = LaurentPoly2.monomial(1, 0)
        t = LaurentPoly2.monomial(0, 1)
        d = s + t + 1
        g = lp2_gcd(d * (s - 1), d * (t * t + 2))
        assert g == d.canonical()

    def test_gcd_divides_both_randomized(self):
        rng = random.Random(11)
        for _ in range(60):
            a, b = rand_lp2(rng, terms=3), rand_lp2(rng, terms=3)
            g = lp2_gcd(a, b)
            if g.is_zero():
                assert a.is_zero() and b.is_zero()
                continue
            assert lp2_divides(g, a) and lp2_divides(g, b)

    def test_gcd_many_short_circuit(self):
        one = LaurentPoly2(1)
        s = LaurentPoly2.monomial(1, 0)
        assert lp2_gcd_many([s + 1, s + 2]) == one

    def test_gcd_content(self):
        a = LaurentPoly2({(0, 0): 4, (1, 0): 8})
        b = LaurentPoly2({(0, 0): 6, (0, 1): 10})
        assert lp2_gcd(a, b) == LaurentPoly2(2)


@given(st.randoms(use_true_random=False))
@settings(max_examples=50, deadline=None)
def test_ring_axioms_sampled(rnd):
    a, b, c = (rand_lp1(rnd) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    x, y, z = (rand_lp2(rnd) for _ in range(3))
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)

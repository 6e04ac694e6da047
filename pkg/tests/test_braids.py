import pytest

from vknot.braids import (BraidWord, FreeGroupAutomorphism,
                          braid_automorphism, close_braid, flat_quotient,
                          format_braid, parse_braid, verify_presentation)
from vknot.errors import CodeSyntaxError, IndexOutOfRange
from vknot.gausscodes import parse_gauss, serialize
from vknot.statesum import f_polynomial


class TestWords:
    def test_parse_formats(self):
        w = parse_braid("s1 r2 S1")
        assert w == parse_braid("s1,r2,S1") == parse_braid("s1r2S1")
        assert format_braid(w) == "s1 r2 S1"
        assert w.n == 3

    def test_explicit_strand_count(self):
        assert parse_braid("s1", 4).n == 4

    def test_index_bounds(self):
        with pytest.raises(IndexOutOfRange):
            parse_braid("s3", 3)
        with pytest.raises(IndexOutOfRange):
            BraidWord(0, [])

    def test_bad_letter(self):
        with pytest.raises(CodeSyntaxError):
            parse_braid("t1")

    def test_inverse_and_product(self):
        w = parse_braid("s1 r2 S1")
        assert format_braid(w.inverse()) == "s1 r2 S1"
        assert (w * w.inverse()).n == 3
        assert braid_automorphism(w * w.inverse()) == \
            FreeGroupAutomorphism.identity(4)


class TestRepresentation:
    def test_sigma_action(self):
        a = braid_automorphism(parse_braid("s1", 2))
        assert a.images[0] == (1, 2, -1)
        assert a.images[1] == (1,)
        assert a.images[2] == (3,)  # the extra stable generator is fixed

    def test_rho_action_conjugates_by_stable_generator(self):
        a = braid_automorphism(parse_braid("r1", 2))
        assert a.images[0] == (3, 2, -3)
        assert a.images[1] == (-3, 1, 3)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_defining_relations_hold(self, n):
        rep = verify_presentation(n)
        for key in ("braid_far_commute", "braid_yang_baxter",
                    "virtual_involution", "virtual_far_commute",
                    "virtual_yang_baxter", "mixed_far_commute",
                    "mixed_detour", "inverses"):
            assert rep[key], key

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_forbidden_relation_fails(self, n):
        # the representation is faithful enough to separate the welded
        # quotient: the forbidden move is not a relation here
        assert verify_presentation(n)["welded_forbidden"] is False


class TestClosure:
    def test_trefoil(self):
        code = close_braid(parse_braid("s1 s1 s1"))
        assert code == parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+")

    def test_virtual_trefoil(self):
        code = close_braid(parse_braid("s1 r1 s1"))
        assert serialize(code) == "O1+,O2+,U1+,U2+"

    def test_two_component_closure(self):
        code = close_braid(parse_braid("s1 r1 s1 r1"))
        assert serialize(code) == "O1+,O2+|U1+,U2+"
        assert code.component_count == 2

    def test_figure_eight(self):
        code = close_braid(parse_braid("s1 S2 s1 S2", 3))
        assert f_polynomial(code) == f_polynomial(
            parse_gauss("O1+,U2-,O3-,U1+,O4+,U3-,O2-,U4+"))

    def test_virtual_only_word_closes_to_unknot(self):
        code = close_braid(parse_braid("r1"))
        assert code.n == 0 and code.component_count == 1

    def test_trivial_braid_closes_to_unlink(self):
        code = close_braid(BraidWord(3, []))
        assert code.n == 0 and code.component_count == 3

    def test_markov_stabilization_preserves_f(self):
        # closure(w) == closure(w * sigma_n) as virtual links
        w = parse_braid("s1 s1 s1")
        stab = parse_braid("s1 s1 s1 s2", 3)
        assert f_polynomial(close_braid(w)) == f_polynomial(close_braid(stab))

    def test_conjugation_preserves_f(self):
        w = parse_braid("s1 r1 s1")
        conj = parse_braid("s1 s1 r1 s1 S1")
        assert f_polynomial(close_braid(w)) == \
            f_polynomial(close_braid(conj))


class TestFlatQuotient:
    def test_sign_forgotten_and_involutions_cancel(self):
        w = parse_braid("s1 S1 r2 r2 s3")
        assert format_braid(flat_quotient(w)) == "s3"

    def test_strand_count_preserved(self):
        assert flat_quotient(parse_braid("s1", 5)).n == 5

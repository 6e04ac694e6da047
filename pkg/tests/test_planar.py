import random

import pytest

from conftest import make_random_code
from vknot.errors import CodeSyntaxError, NotApplicable
from vknot.gausscodes import (carrier_genus, codes_equivalent, parse_gauss,
                              project_free)
from vknot.planar import (DiagramStats, PlanarDiagram, code_stats,
                          delete_curl, diagram_stats, flat_linking_parity,
                          insert_bigon, insert_curl, random_flat_moves,
                          read_code, realize)

FLAT_H = PlanarDiagram([("flat", (1, 3, 2, 4)), ("virtual", (2, 4, 1, 3))])


class TestValidation:
    def test_bad_kind(self):
        with pytest.raises(CodeSyntaxError):
            PlanarDiagram([("twisted", (1, 2, 3, 4))])

    def test_edge_counts_checked(self):
        with pytest.raises(CodeSyntaxError):
            PlanarDiagram([("virtual", (1, 1, 1, 2))])

    def test_valence_checked(self):
        with pytest.raises(CodeSyntaxError):
            PlanarDiagram([("virtual", (1, 2, 3))])

    def test_immutable(self):
        with pytest.raises(AttributeError):
            FLAT_H.free_loops = 2

    def test_walks_cover_all_crossings(self):
        walks = FLAT_H.walks()
        assert len(walks) == FLAT_H.component_count == 2
        seen = {xi for w in walks for xi, _ in w}
        assert seen == {0, 1}


class TestRealize:
    def test_empty_code(self):
        d = realize(parse_gauss(""))
        assert d.crossings == () and d.free_loops == 1

    def test_trefoil_is_planar(self):
        d = realize(parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+"))
        assert (d.classical_count, d.virtual_count) == (3, 0)

    def test_virtual_trefoil_needs_virtual_crossings(self):
        d = realize(parse_gauss("O1+,O2+,U1+,U2+"))
        assert d.classical_count == 2
        assert d.virtual_count == 13

    def test_genus_zero_means_no_virtuals(self, rng):
        found = 0
        while found < 10:
            code = make_random_code(rng, rng.randrange(1, 5))
            if carrier_genus(code) != 0:
                continue
            found += 1
            assert realize(code).virtual_count == 0


class TestRoundtrip:
    def test_classical_and_virtual_codes(self, rng):
        for _ in range(25):
            code = make_random_code(rng, rng.randrange(0, 6),
                                    components=rng.choice((1, 1, 2)))
            back = read_code(realize(code))
            assert codes_equivalent(back, code)

    def test_flat_codes(self, rng):
        for _ in range(15):
            code = make_random_code(rng, rng.randrange(1, 5), kind="flat")
            back = read_code(realize(code))
            assert codes_equivalent(back, code)

    def test_free_codes(self, rng):
        for _ in range(15):
            code = make_random_code(rng, rng.randrange(1, 5), kind="free")
            back = read_code(realize(code))
            assert codes_equivalent(project_free(back), code)


class TestStats:
    def test_code_stats(self):
        s = code_stats(parse_gauss("O1+,O2+,U1+,U2+"))
        assert s == DiagramStats(n=2, v=13, g=1, components=1)

    def test_diagram_stats_json(self):
        # n counts the crossings that survive in the code (flat included)
        s = diagram_stats(FLAT_H)
        assert s.to_json() == {"n": 1, "v": 1, "g": s.g, "components": 2}

    def test_serialization_roundtrip(self):
        assert PlanarDiagram.loads(FLAT_H.dumps()) == FLAT_H


class TestFlatMoves:
    def test_curl_insert_delete_roundtrip(self):
        bigger = insert_curl(FLAT_H, 1, kind="virtual")
        assert bigger.virtual_count == 2
        curls = [xi for xi, c in enumerate(bigger.crossings)
                 if len(set(c.edges)) == 3]
        (xi,) = curls
        back = delete_curl(bigger, xi)
        assert codes_equivalent(read_code(back), read_code(FLAT_H))

    def test_virtual_bigon_insert_preserves_code(self):
        bigger = insert_bigon(FLAT_H, 1, 3, kind="virtual")
        assert bigger.virtual_count == 3
        assert len(bigger.crossings) == 4
        assert codes_equivalent(read_code(bigger), read_code(FLAT_H))

    def test_missing_edge_rejected(self):
        with pytest.raises(NotApplicable):
            insert_curl(FLAT_H, 99)

    def test_parity_invariant_under_random_moves(self):
        for seed in range(5):
            rng = random.Random(1000 + seed)
            d = random_flat_moves(FLAT_H, 40, rng)
            assert flat_linking_parity(d) == 1

    def test_parity_zero_for_split_components(self):
        d = PlanarDiagram([], free_loops=2)
        assert flat_linking_parity(d) == 0

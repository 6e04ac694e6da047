"""Alexander biquandle over Z[s^±1, t^±1]: relation matrix, G_K(s,t), ideals.

Crossing relations (under-in a, over-in b, under-out c, over-out d):
positive  c = t*a + (1-s*t)*b,  d = s*b
negative  c = t^-1*a + (1-s^-1*t^-1)*b,  d = s^-1*b
Each crossing contributes two rows of the presentation matrix; columns are
the 2n diagram edges in code-position order.
"""

import itertools

from .biracks import _code_edges, _crossing_relations
from .errors import EmptyCode
from .laurent import LaurentPoly2, lp2_divexact, lp2_gcd_many
from .linalg import Ring, bareiss_det


def _lp2_ring():
    def div(a, b):
        q = lp2_divexact(a, b)
        if q is None:
            raise ArithmeticError("non-exact division in Bareiss step")
        return q

    return Ring(
        zero=LaurentPoly2(), one=LaurentPoly2(1),
        add=lambda a, b: a + b, sub=lambda a, b: a - b,
        mul=lambda a, b: a * b, divexact=div,
        is_zero=lambda a: a.is_zero(),
        size=lambda a: a.term_count(),
    )


LP2_RING = _lp2_ring()

_S = LaurentPoly2.monomial(1, 0)
_T = LaurentPoly2.monomial(0, 1)
_SI = LaurentPoly2.monomial(-1, 0)
_TI = LaurentPoly2.monomial(0, -1)
_ONE = LaurentPoly2(1)


class RelationMatrix:
    """2n x 2n presentation matrix of the Alexander biquandle module."""

    __slots__ = ("entries", "edge_labels", "row_labels")

    def __init__(self, entries, edge_labels, row_labels):
        object.__setattr__(self, "entries",
                           tuple(tuple(row) for row in entries))
        object.__setattr__(self, "edge_labels", tuple(edge_labels))
        object.__setattr__(self, "row_labels", tuple(row_labels))

    def __setattr__(self, name, value):
        raise AttributeError("RelationMatrix is immutable")

    @property
    def dimension(self):
        return len(self.entries)

    def to_json(self):
        return {
            "edge_labels": [list(e) for e in self.edge_labels],
            "row_labels": list(self.row_labels),
            "entries": [[p.to_pairs() for p in row] for row in self.entries],
        }


def relation_matrix(code):
    """Presentation matrix of the diagram's Alexander biquandle module.

    Rows come in pairs per crossing (under-out relation, then over-out
    relation), crossings ordered by first passage in the code; columns are
    edges in code-position order.
    """
    if code.n == 0:
        raise EmptyCode("relation matrix needs at least one crossing")
    edges, _ = _code_edges(code)
    edge_ix = {e: i for i, e in enumerate(edges)}
    dim = len(edges)
    rows = []
    row_labels = []
    rels = _crossing_relations(code, None)
    # order crossings by first passage position in the code
    occ = code.occurrences()
    first_pos = {ch: min((ci, ti) for ci, ti, _ in occ[ch]) for ch in occ}
    order = sorted(occ, key=lambda ch: first_pos[ch])
    by_chord = dict(zip(sorted(occ), rels))
    for chord in order:
        a, b, c, d, pos = by_chord[chord]
        r1 = [LaurentPoly2() for _ in range(dim)]
        r2 = [LaurentPoly2() for _ in range(dim)]
        if pos:
            coef_a, coef_b = _T, _ONE - _S * _T
            coef_d = _S
        else:
            coef_a, coef_b = _TI, _ONE - _SI * _TI
            coef_d = _SI
        r1[edge_ix[c]] = r1[edge_ix[c]] + _ONE
        r1[edge_ix[a]] = r1[edge_ix[a]] - coef_a
        r1[edge_ix[b]] = r1[edge_ix[b]] - coef_b
        r2[edge_ix[d]] = r2[edge_ix[d]] + _ONE
        r2[edge_ix[b]] = r2[edge_ix[b]] - coef_d
        rows.append(r1)
        row_labels.append("under-out %d" % chord)
        rows.append(r2)
        row_labels.append("over-out %d" % chord)
    return RelationMatrix(rows, edges, row_labels)


def generalized_alexander(code):
    """G_K(s,t): canonical unit representative of det(relation matrix).

    Zero for the empty code by convention (matching its vanishing on the
    unknot and all classical knots).
    """
    if code.n == 0:
        return LaurentPoly2()
    m = relation_matrix(code)
    det = bareiss_det(m.entries, LP2_RING)
    return det.canonical()


def elementary_ideal_gcd(m, codim):
    """gcd (canonical) of all (d-codim) x (d-codim) minors of the matrix."""
    d = m.dimension
    size = d - codim
    if size <= 0:
        raise ValueError("codimension too large")
    minors = []
    for rows in itertools.combinations(range(d), size):
        for cols in itertools.combinations(range(d), size):
            sub = [[m.entries[r][c] for c in cols] for r in rows]
            det = bareiss_det(sub, LP2_RING)
            if not det.is_zero():
                minors.append(det)
    return lp2_gcd_many(minors)

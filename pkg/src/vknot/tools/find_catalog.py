"""Search for the 4-crossing connected-sum catalog codes.

Two of the catalog knots are connected sums of a pair of trivial
2-crossing virtual tangles: one is detected by the quaternionic
codimension-1 gcd (Study determinant 0, gcd 2 + 5t^2 + 2t^4), the other
has vanishing generalized Alexander polynomial but a codimension-1
Alexander ideal generated by the unit form of s^-1 - t - 1.  Neither is
pinned by a published Gauss code here, so we enumerate every composite
of two trivial halves and filter on those invariant fingerprints.

Run as:  python3 -m vknot.tools.find_catalog
"""

import itertools

from vknot.alexander import (elementary_ideal_gcd, generalized_alexander,
                             relation_matrix)
from vknot.gausscodes import GaussCode, serialize
from vknot.moves import simplify
from vknot.quaternion import codim1_gcd, quaternionic_relations, study_det
from vknot.statesum import f_polynomial


def two_chord_codes():
    """All 2-chord knot codes as token sequences (not up to rotation:
    the subword order matters when halves are concatenated)."""
    tokens = [("O", 1), ("U", 1), ("O", 2), ("U", 2)]
    for order in itertools.permutations(tokens):
        for s1, s2 in itertools.product((1, -1), repeat=2):
            sign = {1: s1, 2: s2}
            yield [(c, p, sign[c]) for p, c in order]


def is_trivial_half(tokens):
    """A half is usable iff its closure simplifies to the empty code."""
    code = GaussCode([list(tokens)])
    reduced, _cert = simplify(code, budget=4)
    return reduced.n == 0


def composites(halves):
    seen = set()
    for left, right in itertools.product(halves, repeat=2):
        shifted = [(c + 2, p, s) for c, p, s in right]
        code = GaussCode([list(left) + shifted])
        if code in seen:
            continue
        seen.add(code)
        yield code


def main():
    halves = [h for h in two_chord_codes() if is_trivial_half(h)]
    print("trivial halves: %d of 96" % len(halves))

    hits = []
    for code in composites(halves):
        if str(f_polynomial(code)) != "1":
            continue
        if str(generalized_alexander(code)) != "0":
            continue
        qm = quaternionic_relations(code)
        if str(study_det(qm)) != "0":
            continue
        if str(codim1_gcd(qm)) != "2 + 5*t^2 + 2*t^4":
            continue
        g1 = elementary_ideal_gcd(relation_matrix(code), 1)
        hits.append((serialize(code), str(g1)))

    print("\ncomposites with Study det 0 and quaternionic gcd 2+5t^2+2t^4,")
    print("with their Alexander codim-1 gcd (1 <=> trivial Alexander module;")
    print("a unit multiple of s^-1-t-1 marks the other figure-8 companion):")
    for text, g1 in sorted(hits, key=lambda p: (p[1], p[0])):
        print("  %-36s alex codim-1: %s" % (text, g1))


if __name__ == "__main__":
    main()

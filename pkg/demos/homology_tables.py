"""Small tables of birack homology.

Enumerates all biracks of order <= 3 (up to relabeling) and prints the
first few homology groups in both the full (rack-style) and degenerate
quotient (quandle-style) variants.  The dihedral quandle on three elements
shows the familiar Z_3 torsion in degree three.
"""

from vknot.biracks import enumerate_biracks, format_birack
from vknot.homology import homology, pi1_abelianization


def group_str(free, torsion):
    parts = ["Z"] * free + ["Z/%d" % t for t in torsion]
    return " + ".join(parts) if parts else "0"


for order in (2, 3):
    print("=== biracks of order %d ===" % order)
    for b in enumerate_biracks(order):
        tags = []
        if b.is_biquandle:
            tags.append("biquandle")
        head = format_birack(b) + (" (%s)" % ", ".join(tags) if tags else "")
        print(head)
        hs = ["H%d=%s" % (k, group_str(*homology(b, k))) for k in (1, 2, 3)]
        print("   full:     ", "  ".join(hs))
        if b.is_biquandle:
            hs = ["H%d=%s" % (k, group_str(*homology(b, k, "quotient")))
                  for k in (1, 2, 3)]
            print("   quotient: ", "  ".join(hs))
        free, torsion = pi1_abelianization(b)
        print("   associated group abelianized:", group_str(free, torsion))
    print()

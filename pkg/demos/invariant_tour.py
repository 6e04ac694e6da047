"""Invariant table for the built-in catalog.

Prints, for each knot entry: the Kauffman bracket, the normalized
f-polynomial, the atom genus with the span bound, and dihedral coloring
counts.  Good first stop for seeing what each invariant can and cannot
distinguish.
"""

from vknot.biracks import colorings, dihedral_quandle
from vknot.catalog import catalog_entries
from vknot.gausscodes import serialize
from vknot.statesum import atom_profile, f_polynomial, span_bound_check

R3 = dihedral_quandle(3)
R5 = dihedral_quandle(5)

for entry in catalog_entries():
    if entry.code.kind != "classical":
        continue
    code = entry.code
    print("== %s ==" % entry.name)
    print("   code:    ", serialize(code) or "(empty)")
    print("   f:       ", f_polynomial(code))
    if code.n and code.component_count == 1:
        prof = atom_profile(code)
        span, bound, ok = span_bound_check(code)
        print("   atom:     genus %s (%sorientable)"
              % (prof.genus, "" if prof.orientable else "non-"))
        print("   span:     %d <= %d (%s)"
              % (span, bound, "equality" if span == bound else "strict"))
    print("   colorings: R3=%d  R5=%d"
          % (colorings(code, R3), colorings(code, R5)))
    print()

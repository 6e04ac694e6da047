"""Virtual braids: the free-group representation and closures.

Checks the defining relations of the virtual braid group in the
representation, shows that the forbidden (welded) relation genuinely fails
there, and closes a few words to Gauss codes with their f-polynomials.
"""

from vknot.braids import (close_braid, format_braid, parse_braid,
                          verify_presentation)
from vknot.gausscodes import serialize
from vknot.statesum import f_polynomial

print("defining relations of VB_4 under the representation:")
for name, holds in sorted(verify_presentation(4).items()):
    print("   %-22s %s" % (name, "holds" if holds else "FAILS"))
print()
print("(the forbidden welded relation failing is a feature: the")
print(" representation separates the welded quotient)")
print()

for text in ("s1 s1 s1", "s1 r1 s1", "s1 S2 s1 S2", "s1 r1 s1 r1"):
    word = parse_braid(text)
    code = close_braid(word)
    print("closure(%s) = %s" % (format_braid(word), serialize(code) or "-"))
    print("   components: %d   f: %s"
          % (code.component_count, f_polynomial(code)))

"""The filter-lattice envelope.

The meet-irreducibles of a distributive SUS form a poset; its nonempty
order filters, ordered by reverse inclusion, are a distributive lattice
into which the original structure embeds via x |-> {irreducibles above
x}.  On the V-shape the envelope completes the missing meet of a and b,
producing a diamond.
"""

from envelope_kit import (
    build_envelope,
    check_embedding,
    check_universal,
    filter_lattice_as_sus,
    to_filter,
    validate_sus,
)
from envelope_kit.birkhoff import extension_preserves_bottom, nu_hom
from envelope_kit.enumeration import _padded_boolean_hom
from envelope_kit.instances import v3_poset

s = validate_sus(v3_poset())
e = build_envelope(s)

print("filters of the irreducible poset (reverse inclusion):")
for i in range(e.size):
    print("  %s%s%s" % (e.label(i),
                        "   <- bottom" if i == e.bottom else "",
                        "   <- top" if i == e.top_filter else ""))

print()
print("the embedding x |-> filter of irreducibles above x:")
for x in range(s.n):
    print("  nu(%s) = %s" % (s.label(x), e.label(e.filter_of_element[x])))

fa = e.index(to_filter(e, s.base.index("a")))
fb = e.index(to_filter(e, s.base.index("b")))
print()
print("the envelope supplies the missing meet:")
print("  nu(a) ^ nu(b) =", e.label(e.meet(fa, fb)))

print()
print("embedding checks:", check_embedding(e).passed)

# Universal property: any join/top/extant-meet preserving map into a
# distributive lattice extends uniquely to the envelope -- but the
# extension need not send the envelope's least element to the target's.
h = _padded_boolean_hom(s)
print("universal extension verified:", check_universal(e, h).passed)
print("extension preserves the least element:",
      extension_preserves_bottom(e, h))
d = filter_lattice_as_sus(e)
print("(the identity extension does:",
      extension_preserves_bottom(e, nu_hom(e, d)), ")")

"""The two envelopes are the same lattice.

Inside the valuation ring, the virtual meet of any nonempty subset is
defined by inclusion-exclusion over the subset's minimal elements.  Its
range bijects with the filter lattice: each subset pairs with the filter
of irreducibles its elements generate.  This script exhibits the
bijection and the lifting of valuations across it.
"""

from envelope_kit import build_envelope, build_vring, validate_sus
from envelope_kit.envelope import (
    build_venvelope,
    check_equivalence,
    filter_meet_full,
    filter_meet_local,
    virtual_meet,
)
from envelope_kit.instances import k4_poset

s = validate_sus(k4_poset())
e = build_envelope(s)
r = build_vring(s)

print("instance: a, b < t < 1   (no meet for a, b)")
print()
print("filter lattice vs ring envelope:")
venv = build_venvelope(r, e)
for pos, fi in enumerate(venv.filter_of):
    print("  %-12s <-> %s" % (e.label(fi),
                              r.format_vector(venv.elements[pos])))

print()
print("three formulas, one value (the full filter, its localized meets,")
print("and its minimal elements):")
for i, f in enumerate(e.filters):
    full = filter_meet_full(r, f)
    local = filter_meet_local(r, e, i)
    subset = virtual_meet(r, f)
    assert full == local == subset
    print("  %-12s -> %s" % (e.label(i), r.format_vector(full)))

print()
item = check_equivalence(r, e, seed=0)
print("full equivalence check (bijection, order, ranks, irreducibles,")
print("valuation lifting):", "PASS" if item.passed else "FAIL")

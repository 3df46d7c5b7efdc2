"""Build a small instance from cover pairs and validate the axioms.

A distributive strong upper semilattice (SUS) is a join semilattice with
a greatest element in which any two elements sharing a lower bound have
a greatest lower bound, and every interval is a distributive lattice.
This script walks through validation on the V-shape {a, b < 1} and shows
the two ways validation can reject an input.
"""

from envelope_kit import build_poset, validate_sus
from envelope_kit.errors import IntervalNotDistributive, JoinMissing
from envelope_kit.instances import m3_poset

print("== the V-shape: a, b < 1 ==")
p = build_poset(["a", "b", "1"], [("a", "1"), ("b", "1")])
s = validate_sus(p)
print("elements:", ", ".join(p.names))
print("top:", s.label(s.top))
print("minimal elements:", sorted(str(s.label(x)) for x in s.minimals))
print("meet-irreducibles:", sorted(str(s.label(m)) for m in s.irreducibles))

a, b = p.index("a"), p.index("b")
print("a v b =", s.label(s.join[a][b]))
print("a ^ b =", s.meet[a][b], " (no common lower bound, so no meet)")
print("is a lattice:", s.is_lattice())

print()
print("== rejected: no least upper bound ==")
try:
    validate_sus(build_poset(
        ["a", "b", "c", "d", "1"],
        [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"),
         ("c", "1"), ("d", "1")]))
except JoinMissing as exc:
    print("JoinMissing:", exc)

print()
print("== rejected: a non-distributive interval ==")
try:
    validate_sus(m3_poset())
except IntervalNotDistributive as exc:
    print(exc)

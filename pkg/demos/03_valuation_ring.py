"""The valuation ring.

The ring is the free abelian group on the elements, with multiplication
induced by join, modulo the relations

    (x v y v z) + (x v z)^(y v z) - (x v z) - (y v z)

over all triples (the meet always exists: both joins dominate z).
Cosets are reduced against the Hermite basis of the relation lattice, so
every class has one canonical form and equality is a tuple comparison.
"""

from envelope_kit import build_vring, validate_sus
from envelope_kit.instances import b2_poset, k4_poset
from envelope_kit.valuation import GroupValuation, induced_hom, is_valuation

s = validate_sus(b2_poset())
r = build_vring(s)

print("== the diamond 0 < a, b < 1 ==")
print("relation generators:", len(r.ideal.generators))
for g in r.ideal.hnf_basis:
    print("  relation:", r.format_vector(g), "= 0")
print("Smith invariants:", r.ideal.snf_invariants, "(torsion-free)")
print("rank:", r.rank, "= number of meet-irreducibles")
for x in range(s.n):
    print("  iota(%s) = %s" % (s.label(x), r.format_vector(r.embed(x))))

a, b = s.base.index("a"), s.base.index("b")
print("iota(a) * iota(b) =",
      r.format_vector(r.multiply(r.unit(a), r.unit(b))), " (join)")

print()
print("== valuations factor through the ring ==")
height = GroupValuation(0, (0, 1, 1, 2))  # 0, a, b, 1
print("height function is a valuation:", is_valuation(s, height))
phi = induced_hom(r, height)
print("phi(iota(0)) =", phi(r.embed(s.base.index("0"))))

print()
print("== a non-lattice instance: a, b < t < 1 ==")
k = validate_sus(k4_poset())
rk = build_vring(k)
print("relation generators:", len(rk.ideal.generators),
      " (every element is irreducible)")
print("rank:", rk.rank)
from envelope_kit.envelope import virtual_meet

pair = [k.base.index("a"), k.base.index("b")]
print("virtual meet of a and b:", rk.format_vector(virtual_meet(rk, pair)),
      " -- a new element, not the class of any original one")

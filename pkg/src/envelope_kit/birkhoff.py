"""The filter-lattice envelope of a distributive strong upper semilattice.

The envelope is the lattice of nonempty order filters of the
meet-irreducible poset, ordered by reverse inclusion (so meet is union
and join is intersection).  The semilattice embeds via x |-> the set of
irreducibles above x, and the image is an upward-closed sub-semilattice.
"""

import os
from dataclasses import dataclass

from .errors import FlagsNotVerified, NotALattice, NotMinimal, SizeCap
from .order import poset_from_leq
from .report import VerificationItem
from .semilattice import Sus, interval_sus, irreducibles_above, validate_sus, wedge

DEFAULT_SIZE_CAP = 20
SIZE_CAP_ENV = "ENVELOPE_KIT_SIZE_CAP"


def _size_cap():
    raw = os.environ.get(SIZE_CAP_ENV)
    return int(raw) if raw else DEFAULT_SIZE_CAP


@dataclass(frozen=True)
class FilterLattice:
    """All nonempty order filters of the irreducible poset.

    Filters are frozensets of source-element indices (members of M).
    Order is reverse inclusion; join is intersection, meet is union.
    """

    source: Sus
    filters: tuple            # deterministic order: by (size, members)
    filter_of_element: tuple  # element index -> filter index
    bottom: int               # index of the filter M (least element)
    top_filter: int           # index of {top} (greatest element)

    @property
    def size(self):
        return len(self.filters)

    def index(self, members) -> int:
        members = frozenset(members)
        key = (len(members), tuple(sorted(members)))
        lo, hi = 0, len(self.filters)
        while lo < hi:
            mid = (lo + hi) // 2
            f = self.filters[mid]
            if (len(f), tuple(sorted(f))) < key:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self.filters) and self.filters[lo] == members:
            return lo
        raise KeyError(members)

    def leq(self, i, j) -> bool:
        return self.filters[i] >= self.filters[j]

    def join(self, i, j) -> int:
        return self.index(self.filters[i] & self.filters[j])

    def meet(self, i, j) -> int:
        return self.index(self.filters[i] | self.filters[j])

    def label(self, i) -> str:
        f = self.filters[i]
        return "{%s}" % ",".join(str(self.source.label(x))
                                 for x in sorted(f))


def build_envelope(s: Sus) -> FilterLattice:
    """Materialize every nonempty up-set of the irreducible poset."""
    irr = sorted(s.irreducibles)
    if len(irr) > _size_cap():
        raise SizeCap("|M| = %d exceeds the materialization cap %d "
                      "(override with %s)"
                      % (len(irr), _size_cap(), SIZE_CAP_ENV))
    filters = []
    for bits in range(1, 1 << len(irr)):
        members = frozenset(irr[i] for i in range(len(irr)) if bits >> i & 1)
        if all(m2 in members
               for m in members for m2 in irr if s.base.leq(m, m2)):
            filters.append(members)
    filters.sort(key=lambda f: (len(f), tuple(sorted(f))))
    filters = tuple(filters)
    lattice = FilterLattice(
        source=s,
        filters=filters,
        filter_of_element=tuple(
            filters.index(irreducibles_above(s, x)) for x in range(s.n)),
        bottom=filters.index(frozenset(irr)),
        top_filter=filters.index(frozenset({s.top})),
    )
    return lattice


def to_filter(e: FilterLattice, x: int) -> frozenset:
    """The embedding: x maps to the filter of irreducibles above it."""
    return e.filters[e.filter_of_element[x]]


def check_embedding(e: FilterLattice) -> VerificationItem:
    """The embedding is injective, order-reflecting, join/meet/top
    preserving and has upward-closed image."""
    name = "filter_embedding"
    s = e.source
    nu = e.filter_of_element
    if len(set(nu)) != s.n:
        return VerificationItem(name, False, "embedding is not injective")
    for x in range(s.n):
        for y in range(s.n):
            if s.base.leq(x, y) != e.leq(nu[x], nu[y]):
                return VerificationItem(
                    name, False, "order mismatch at %s, %s"
                    % (s.label(x), s.label(y)))
            if e.join(nu[x], nu[y]) != nu[s.join[x][y]]:
                return VerificationItem(
                    name, False, "join not preserved at %s, %s"
                    % (s.label(x), s.label(y)))
            m = s.meet[x][y]
            if m is not None and e.meet(nu[x], nu[y]) != nu[m]:
                return VerificationItem(
                    name, False, "meet not preserved at %s, %s"
                    % (s.label(x), s.label(y)))
    if nu[s.top] != e.top_filter:
        return VerificationItem(name, False, "top not preserved")
    # upward closure of the image: anything above an image filter (i.e.
    # contained in it) is itself an image filter
    image = set(nu)
    for x in range(s.n):
        for i in range(e.size):
            if e.filters[i] <= e.filters[nu[x]] and i not in image:
                return VerificationItem(
                    name, False, "image not upward closed above %s"
                    % s.label(x))
    return VerificationItem(name, True)


def local_meet(e: FilterLattice, a: int, members) -> int:
    """The meet, inside [a, top], of a filter's part above a minimal a."""
    s = e.source
    if a not in s.minimals:
        raise NotMinimal(str(s.label(a)))
    part = [m for m in members if s.base.leq(a, m)]
    return wedge(s, part) if part else s.top


def check_local_meets(e: FilterLattice) -> VerificationItem:
    """Union/intersection identities and the membership property of the
    localized meets."""
    name = "local_meets"
    s = e.source
    for a in sorted(s.minimals):
        fa = [local_meet(e, a, f) for f in e.filters]
        for i, f in enumerate(e.filters):
            for p in sorted(s.irreducibles):
                if s.base.leq(fa[i], p) and p not in f:
                    return VerificationItem(
                        name, False,
                        "membership fails: %s above the local meet of %s "
                        "at %s but not in it"
                        % (s.label(p), e.label(i), s.label(a)))
            for j in range(e.size):
                union = fa[e.index(f | e.filters[j])]
                if union != s.meet[fa[i]][fa[j]]:
                    return VerificationItem(
                        name, False, "union identity fails at %s: %s, %s"
                        % (s.label(a), e.label(i), e.label(j)))
                inter = fa[e.index(f & e.filters[j])]
                if inter != s.join[fa[i]][fa[j]]:
                    return VerificationItem(
                        name, False,
                        "intersection identity fails at %s: %s, %s"
                        % (s.label(a), e.label(i), e.label(j)))
    return VerificationItem(name, True)


@dataclass(frozen=True)
class SemiHom:
    """A map between semilattices with verified preservation flags."""

    domain: Sus
    codomain: Sus
    mapping: tuple  # domain element -> codomain element
    preserves_join: bool
    preserves_top: bool
    preserves_extant_meets: bool

    @property
    def verified(self):
        return (self.preserves_join and self.preserves_top
                and self.preserves_extant_meets)


def semi_hom(domain: Sus, codomain: Sus, mapping) -> SemiHom:
    """Wrap a mapping, computing its preservation flags by inspection."""
    mapping = tuple(mapping)
    h = mapping.__getitem__
    pj = all(codomain.join[h(x)][h(y)] == h(domain.join[x][y])
             for x in range(domain.n) for y in range(domain.n))
    pt = h(domain.top) == codomain.top
    pm = True
    for x in range(domain.n):
        for y in range(domain.n):
            m = domain.meet[x][y]
            if m is not None and codomain.meet[h(x)][h(y)] != h(m):
                pm = False
    return SemiHom(domain, codomain, mapping, pj, pt, pm)


def extend_hom(e: FilterLattice, h: SemiHom):
    """Extend a semilattice map into a distributive lattice to the whole
    filter lattice: a filter maps to the meet of its image.

    Returns a tuple indexed by filter.  The codomain must have total
    meets (a bottom element).
    """
    if h.domain is not e.source:
        raise ValueError("map domain differs from the envelope source")
    if not h.verified:
        raise FlagsNotVerified("map fails a preservation check")
    if not h.codomain.is_lattice():
        raise NotALattice("codomain has no bottom, meets are not total")
    return tuple(wedge(h.codomain, [h.mapping[m] for m in sorted(f)])
                 for f in e.filters)


def check_universal(e: FilterLattice, h: SemiHom) -> VerificationItem:
    """The extension commutes with the embedding, is a lattice
    homomorphism and is structurally unique.  Preservation of the least
    element is deliberately not required."""
    name = "universal_extension"
    s = e.source
    hat = extend_hom(e, h)
    for x in range(s.n):
        if hat[e.filter_of_element[x]] != h.mapping[x]:
            return VerificationItem(
                name, False, "extension does not restrict to the map at %s"
                % s.label(x))
    cod = h.codomain
    for i in range(e.size):
        for j in range(e.size):
            if hat[e.join(i, j)] != cod.join[hat[i]][hat[j]]:
                return VerificationItem(
                    name, False, "join not preserved at %s, %s"
                    % (e.label(i), e.label(j)))
            if hat[e.meet(i, j)] != cod.meet[hat[i]][hat[j]]:
                return VerificationItem(
                    name, False, "meet not preserved at %s, %s"
                    % (e.label(i), e.label(j)))
    # structural uniqueness: every filter is a meet of embedded
    # irreducibles, so any agreeing homomorphism coincides
    for i, f in enumerate(e.filters):
        expected = wedge(cod, [hat[e.filter_of_element[m]]
                               for m in sorted(f)])
        if hat[i] != expected:
            return VerificationItem(
                name, False, "extension not determined by its values on "
                "embedded irreducibles at %s" % e.label(i))
    return VerificationItem(name, True)


def extension_preserves_bottom(e: FilterLattice, h: SemiHom) -> bool:
    """Whether the extension happens to send least element to least
    element (it need not)."""
    hat = extend_hom(e, h)
    return hat[e.bottom] == h.codomain.base.bottom()


def filter_lattice_as_sus(e: FilterLattice) -> Sus:
    """The filter lattice itself as a validated semilattice, with element
    i corresponding to e.filters[i]."""
    up = []
    for i in range(e.size):
        mask = 0
        for j in range(e.size):
            if e.leq(i, j):
                mask |= 1 << j
        up.append(mask)
    names = tuple(e.label(i) for i in range(e.size))
    return validate_sus(poset_from_leq(names, up))


def nu_hom(e: FilterLattice, d: Sus) -> SemiHom:
    """The embedding packaged as a map into the filter lattice-as-Sus."""
    return semi_hom(e.source, d, e.filter_of_element)


def constant_top_hom(s: Sus, codomain: Sus) -> SemiHom:
    return semi_hom(s, codomain, (codomain.top,) * s.n)


__all__ = [
    "FilterLattice", "SemiHom", "build_envelope", "to_filter",
    "check_embedding", "local_meet", "check_local_meets", "semi_hom",
    "extend_hom", "check_universal", "extension_preserves_bottom",
    "filter_lattice_as_sus", "nu_hom", "constant_top_hom",
    "interval_sus",
]

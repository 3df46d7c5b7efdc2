"""The valuation ring of a distributive strong upper semilattice.

The ring is the free abelian group on the elements, with multiplication
induced by join, modulo the ideal generated by the valuation relations

    (a v b v c) + (a v c)/\\(b v c) - (a v c) - (b v c).

Cosets get unique representatives by reducing against the Hermite basis
of the relation lattice, so equality in the quotient is decidable and
deterministic.
"""

from dataclasses import dataclass

from .birkhoff import SemiHom, semi_hom
from .errors import (
    FlagsNotVerified,
    NotALattice,
    NotAValuation,
    NotMinimal,
    NotWellDefined,
)
from .intlinalg import (
    IntegerRowLattice,
    coordinate_section,
    hnf_lattice,
    smith_invariants,
)
from .report import VerificationItem
from .semilattice import Sus, interval_sus


@dataclass(frozen=True)
class RelationIdeal:
    generators: tuple       # deduplicated, zero vectors dropped
    hnf_basis: tuple        # canonical Hermite basis of their span
    snf_invariants: tuple   # invariant factors of the relation lattice


@dataclass(frozen=True)
class GroupValuation:
    """A candidate valuation into Z (modulus 0) or Z_m (modulus >= 2)."""

    modulus: int
    values: tuple

    def norm(self, v):
        return v % self.modulus if self.modulus else v


def _unit(n, x):
    v = [0] * n
    v[x] = 1
    return tuple(v)


def relation_generators(s: Sus):
    """One vector per ordered triple, deduplicated, zeros dropped.

    The meet in the relation always exists: both joins lie above the
    third element of the triple.
    """
    n = s.n
    seen = set()
    out = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                ac = s.join[a][c]
                bc = s.join[b][c]
                coeffs = {}
                for idx, delta in ((s.join[a][bc], 1),
                                   (s.meet[ac][bc], 1),
                                   (ac, -1), (bc, -1)):
                    coeffs[idx] = coeffs.get(idx, 0) + delta
                vec = tuple(coeffs.get(i, 0) for i in range(n))
                if any(vec) and vec not in seen:
                    seen.add(vec)
                    out.append(vec)
    return out


class ValuationRing:
    """Presentation of the quotient ring with canonical coset forms."""

    def __init__(self, source: Sus, generators):
        self.source = source
        n = source.n
        lattice = IntegerRowLattice(n)
        for g in generators:
            lattice.add(g)
        self._lattice = lattice
        self.ideal = RelationIdeal(
            generators=tuple(generators),
            hnf_basis=lattice.basis(),
            snf_invariants=smith_invariants(lattice.basis(), n),
        )
        self.rank = n - lattice.rank
        pivots = set(lattice.pivot_cols)
        self.basis_cols = tuple(j for j in range(n) if j not in pivots)
        self.element_classes = tuple(
            lattice.reduce(_unit(n, x)) for x in range(n))

    @property
    def n(self):
        return self.source.n

    def canonical(self, vec):
        """The unique reduced representative of vec's coset."""
        return self._lattice.reduce(vec)

    def embed(self, x: int):
        """Canonical form of the class of a semilattice element."""
        return self.element_classes[x]

    def unit(self, x: int):
        return _unit(self.n, x)

    def multiply(self, u, v):
        """Canonical form of the join-induced bilinear product."""
        out = [0] * self.n
        join = self.source.join
        for i, a in enumerate(u):
            if not a:
                continue
            row = join[i]
            for j, b in enumerate(v):
                if b:
                    out[row[j]] += a * b
        return self.canonical(out)

    def restrict(self, vec):
        """Coordinates of a canonical form on the free basis columns."""
        return tuple(vec[j] for j in self.basis_cols)

    def format_vector(self, vec) -> str:
        terms = []
        for i, c in enumerate(vec):
            if not c:
                continue
            label = str(self.source.label(i))
            if not terms:
                terms.append(label if c == 1 else
                             "-%s" % label if c == -1 else
                             "%d%s" % (c, label))
            else:
                sign = "+" if c > 0 else "-"
                mag = abs(c)
                terms.append("%s %s" % (sign, label if mag == 1
                                        else "%d%s" % (mag, label)))
        return " ".join(terms) if terms else "0"


def build_vring(s: Sus) -> ValuationRing:
    return ValuationRing(s, relation_generators(s))


def check_ideal(r: ValuationRing) -> VerificationItem:
    """The relation lattice is an ideal: generator times any element
    reduces to zero."""
    for g in r.ideal.generators:
        for t in range(r.n):
            if any(r.multiply(g, r.unit(t))):
                return VerificationItem(
                    "relation_ideal", False,
                    "generator %s times %s does not vanish"
                    % (r.format_vector(g), r.source.label(t)))
    return VerificationItem("relation_ideal", True)


def is_valuation(s: Sus, f: GroupValuation) -> bool:
    """The defining identity over every triple (the meet always exists)."""
    if len(f.values) != s.n:
        raise ValueError("value table length mismatch")
    v = f.values
    for x in range(s.n):
        for y in range(s.n):
            for z in range(s.n):
                xz = s.join[x][z]
                yz = s.join[y][z]
                lhs = v[s.join[x][yz]] + v[s.meet[xz][yz]]
                rhs = v[xz] + v[yz]
                if f.norm(lhs - rhs):
                    return False
    return True


def induced_hom(r: ValuationRing, f: GroupValuation):
    """The linear extension of a valuation; factors through the quotient."""
    if not is_valuation(r.source, f):
        raise NotAValuation("defining identity fails")
    for g in r.ideal.hnf_basis:
        if f.norm(sum(c * v for c, v in zip(g, f.values))):
            raise NotAValuation("nonzero on a relation")  # unreachable

    def phi(vec):
        return f.norm(sum(c * v for c, v in zip(vec, f.values)))

    return phi


def induced_ring_map(r1: ValuationRing, r2: ValuationRing, h: SemiHom):
    """Functorial map between quotient rings from a suitable semilattice
    map (join, top and extant meets preserved).

    Raises NotWellDefined when some relation generator fails to vanish in
    the target, signalling the map is not of suitable type.
    """
    if not h.verified:
        raise FlagsNotVerified("map fails a preservation check")
    images = [r2.embed(h.mapping[x]) for x in range(r1.n)]

    def push(vec):
        out = [0] * r2.n
        for x, c in enumerate(vec):
            if c:
                for j, w in enumerate(images[x]):
                    out[j] += c * w
        return r2.canonical(out)

    for g in r1.ideal.hnf_basis:
        if any(push(g)):
            raise NotWellDefined(r1.format_vector(g))
    return push


def check_iota_injective(r: ValuationRing) -> VerificationItem:
    """Distinct elements get distinct canonical forms."""
    if len(set(r.element_classes)) != r.n:
        return VerificationItem(
            "embedding_injective", False,
            "two elements share a canonical form")
    return VerificationItem("embedding_injective", True)


def check_infinite_order(r: ValuationRing) -> VerificationItem:
    """Every element class has infinite order in the quotient group."""
    name = "infinite_order"
    if any(d != 1 for d in r.ideal.snf_invariants):
        return VerificationItem(
            name, False, "quotient has torsion: invariants %s"
            % (r.ideal.snf_invariants,))
    for x in range(r.n):
        if not any(r.embed(x)):
            return VerificationItem(
                name, False, "class of %s is zero" % r.source.label(x))
    return VerificationItem(name, True)


def check_basis(r: ValuationRing) -> VerificationItem:
    """Rank equals the irreducible count, the quotient is torsion-free,
    and the irreducible classes form a free basis."""
    name = "irreducible_basis"
    s = r.source
    irr = sorted(s.irreducibles)
    if r.rank != len(irr):
        return VerificationItem(
            name, False, "rank %d != %d irreducibles" % (r.rank, len(irr)))
    if any(d != 1 for d in r.ideal.snf_invariants):
        return VerificationItem(
            name, False, "invariant factors %s are not all 1"
            % (r.ideal.snf_invariants,))
    rows = [r.restrict(r.embed(m)) for m in irr]
    lat = hnf_lattice(rows, r.rank)
    if lat.rank != r.rank or any(
            lat.rows[i][lat.pivot_cols[i]] != 1 for i in range(lat.rank)):
        return VerificationItem(
            name, False, "irreducible classes do not span the quotient")
    return VerificationItem(name, True)


def check_retract(r: ValuationRing, a: int) -> VerificationItem:
    """The interval [a, top] ring sits inside the whole ring as a retract.

    Checks the relation-lattice intersection property, injectivity of
    the inclusion-induced map and that join-with-a splits it.
    """
    name = "interval_retract"
    s = r.source
    if a not in s.minimals:
        raise NotMinimal(str(s.label(a)))
    sub, members = interval_sus(s, a, s.top)
    r_sub = build_vring(sub)
    back = {x: i for i, x in enumerate(members)}

    incl = semi_hom(sub, s, tuple(members))
    theta = induced_ring_map(r_sub, r, incl)
    join_a = semi_hom(s, sub, tuple(back[s.join[x][a]] for x in range(s.n)))
    phi = induced_ring_map(r, r_sub, join_a)

    # relation lattice of the interval = section of the whole relation
    # lattice by the interval coordinates
    member_set = set(members)
    section = coordinate_section(
        r.ideal.hnf_basis, r.n, keep=member_set)
    lifted = hnf_lattice(
        [tuple(g[back[j]] if j in member_set else 0 for j in range(r.n))
         for g in r_sub.ideal.hnf_basis], r.n).basis()
    if section != lifted:
        return VerificationItem(
            name, False,
            "relation lattice of [%s, top] is not the coordinate section"
            % s.label(a))

    # theta injective and split by phi: check on every interval class
    seen = {}
    for y in range(sub.n):
        img = theta(r_sub.unit(y))
        if img in seen and seen[img] != r_sub.embed(y):
            return VerificationItem(
                name, False, "inclusion map is not injective at %s"
                % sub.label(y))
        seen[img] = r_sub.embed(y)
        if phi(img) != r_sub.embed(y):
            return VerificationItem(
                name, False, "retract identity fails at %s" % sub.label(y))
    return VerificationItem(name, True)


def prime_filter_valuations(s: Sus):
    """Characteristic functions into Z_2 of all prime filters.

    Only lattices qualify (the complement-closure condition needs total
    meets to be meaningful and the separation claim is for lattices).
    """
    if not s.is_lattice():
        raise NotALattice("no bottom element")
    bottom = s.base.bottom()
    out = []
    for g in range(s.n):
        if g == bottom:
            continue  # improper filter
        f = frozenset(x for x in range(s.n) if s.base.leq(g, x))
        outside = [x for x in range(s.n) if x not in f]
        if all(s.join[x][y] not in f for x in outside for y in outside):
            out.append(GroupValuation(
                modulus=2,
                values=tuple(1 if x in f else 0 for x in range(s.n))))
    return out


def check_prime_filter_separation(s: Sus) -> VerificationItem:
    """Every pair of distinct elements is separated by some prime-filter
    valuation; skipped (passing) when the instance is not a lattice."""
    name = "prime_filter_separation"
    if not s.is_lattice():
        return VerificationItem(name, True, "skipped: not a lattice")
    vals = prime_filter_valuations(s)
    for f in vals:
        if not is_valuation(s, f):
            return VerificationItem(
                name, False, "characteristic function is not a valuation")
    for x in range(s.n):
        for y in range(x + 1, s.n):
            if not any(f.values[x] != f.values[y] for f in vals):
                return VerificationItem(
                    name, False, "%s and %s are not separated"
                    % (s.label(x), s.label(y)))
    return VerificationItem(name, True)

"""Validated strong upper semilattices (SUS).

A SUS is a join semilattice with a greatest element in which any two
elements with a common lower bound have a greatest lower bound.  We only
admit the distributive ones: every interval must be a distributive
lattice.  Validation fills total join and partial meet tables, the
meet-irreducible set (which by convention contains the top) and the set
of minimal elements.
"""

from dataclasses import dataclass

from .errors import (
    IntervalNotDistributive,
    IsTop,
    JoinMissing,
    NoLowerBound,
    NoTop,
    NotMeetIrreducible,
    StrongConditionFails,
)
from .order import Poset, _mask_iter
from .report import VerificationItem


@dataclass(frozen=True)
class Sus:
    """A validated (distributive) strong upper semilattice."""

    base: Poset
    top: int
    join: tuple   # total n x n table
    meet: tuple   # partial n x n table, None where no lower bound exists
    irreducibles: frozenset  # meet-irreducibles, top included
    minimals: frozenset
    distributive: bool

    @property
    def n(self):
        return self.base.n

    def label(self, i):
        return self.base.label(i)

    def is_lattice(self) -> bool:
        """Total meet, i.e. the semilattice has a bottom element."""
        return self.base.bottom() is not None


def _least_of(p, mask, rows):
    """The member of mask below all of mask w.r.t. rows (up rows -> lub)."""
    for u in _mask_iter(mask):
        if mask & ~rows[u] == 0:
            return u
    return None


def validate_sus(p: Poset) -> Sus:
    """Check the SUS axioms on p and build the operation tables.

    Raises NoTop, JoinMissing, StrongConditionFails or
    IntervalNotDistributive.  Every interval of a validated instance is a
    distributive lattice; the one-element poset is accepted.
    """
    n = p.n
    top = p.top()
    if top is None:
        raise NoTop("no greatest element")

    join = [[None] * n for _ in range(n)]
    meet = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            j = _least_of(p, p.up[x] & p.up[y], p.up)
            if j is None:
                raise JoinMissing("%s, %s" % (p.label(x), p.label(y)))
            join[x][y] = join[y][x] = j
            lb = p.down[x] & p.down[y]
            if lb:
                m = _least_of(p, lb, p.down)
                if m is None:
                    raise StrongConditionFails(
                        "%s, %s" % (p.label(x), p.label(y)))
                meet[x][y] = meet[y][x] = m

    # Interval distributivity, checked through the equivalent triple law:
    # whenever x, y, z have a common lower bound all the meets below exist
    # and the law must hold inside the interval they generate.
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not p.down[x] & p.down[y] & p.down[z]:
                    continue
                lhs = meet[x][join[y][z]]
                rhs = join[meet[x][y]][meet[x][z]]
                if lhs != rhs:
                    lo = meet[meet[x][y]][z]
                    hi = join[x][join[y][z]]
                    raise IntervalNotDistributive(p.label(lo), p.label(hi))

    irr = set()
    for m in range(n):
        trivial = True
        for x in range(n):
            for y in range(n):
                if meet[x][y] == m and x != m and y != m:
                    trivial = False
                    break
            if not trivial:
                break
        if trivial:
            irr.add(m)

    return Sus(
        base=p,
        top=top,
        join=tuple(tuple(row) for row in join),
        meet=tuple(tuple(row) for row in meet),
        irreducibles=frozenset(irr),
        minimals=frozenset(i for i in range(n) if p.down[i] == 1 << i),
        distributive=True,
    )


def meet_irreducibles(s: Sus) -> frozenset:
    """Elements only expressible as trivial meets (top included)."""
    return s.irreducibles


def irreducibles_above(s: Sus, x: int) -> frozenset:
    """The meet-irreducibles above x (the up-set of x inside M)."""
    return frozenset(m for m in s.irreducibles if s.base.leq(x, m))


def wedge(s: Sus, xs) -> int:
    """Greatest lower bound of a nonempty set, by folding binary meets.

    Raises NoLowerBound when the set has no common lower bound.
    """
    xs = list(xs)
    if not xs:
        raise ValueError("wedge of the empty set")
    lb = s.base.full_mask
    for x in xs:
        lb &= s.base.down[x]
    if not lb:
        raise NoLowerBound(",".join(str(s.label(x)) for x in xs))
    acc = xs[0]
    for x in xs[1:]:
        acc = s.meet[acc][x]
    return acc


def next_irreducible(s: Sus, x: int) -> int:
    """The glb of all meet-irreducibles strictly above x (x must be in M)."""
    if x not in s.irreducibles:
        raise NotMeetIrreducible(str(s.label(x)))
    if x == s.top:
        raise IsTop(str(s.label(x)))
    above = [m for m in s.irreducibles if s.base.leq(x, m) and m != x]
    return wedge(s, above)


def check_irreducible_meets(s: Sus) -> VerificationItem:
    """Every element is the meet of the irreducibles above it."""
    for x in range(s.n):
        if wedge(s, irreducibles_above(s, x)) != x:
            return VerificationItem(
                "irreducible_meets", False,
                "element %s is not the meet of irreducibles above it"
                % s.label(x))
    return VerificationItem("irreducible_meets", True)


def check_next_irreducible(s: Sus) -> VerificationItem:
    """The identities satisfied by the successor of an irreducible.

    For x in M \\ {top} with successor x+:
      (i)   x < x+;
      (ii)  x v z = x+ v z    for z in M not strictly below x;
      (iii) x v z = x+ v z+   for z in M incomparable with x.

    An irreducible z strictly below x genuinely breaks (ii): then
    x v z = x while x+ v z >= x+ > x (already on the 3-chain), so the
    hypotheses exclude that configuration.  (iii) composes (ii) in both
    directions, hence needs incomparability.
    """
    name = "next_irreducible"
    non_top = sorted(s.irreducibles - {s.top})
    succ = {x: next_irreducible(s, x) for x in non_top}
    for x in non_top:
        xp = succ[x]
        if not (s.base.leq(x, xp) and x != xp):
            return VerificationItem(
                name, False, "successor of %s is not strictly above it"
                % s.label(x))
        for z in sorted(s.irreducibles):
            if z == x:
                continue
            below = s.base.leq(z, x)
            above = s.base.leq(x, z)
            if not below and s.join[x][z] != s.join[xp][z]:
                return VerificationItem(
                    name, False, "join identity (ii) fails at %s, %s"
                    % (s.label(x), s.label(z)))
            if (not below and not above
                    and s.join[x][z] != s.join[xp][succ[z]]):
                return VerificationItem(
                    name, False, "join identity (iii) fails at %s, %s"
                    % (s.label(x), s.label(z)))
    return VerificationItem(name, True)


def interval_sus(s: Sus, a: int, b: int):
    """The interval [a, b] as a semilattice of its own.

    Returns (sub, members) where members[i] is the parent index of the
    i-th interval element.  Intervals of a distributive SUS are
    distributive lattices, so validation cannot fail.
    """
    from .order import interval, poset_from_leq

    view = interval(s.base, a, b)
    members = view.members
    back = {x: i for i, x in enumerate(members)}
    up = []
    for x in members:
        mask = 0
        for y in members:
            if s.base.leq(x, y):
                mask |= 1 << back[y]
        up.append(mask)
    sub_poset = poset_from_leq(tuple(s.label(x) for x in members), up)
    return validate_sus(sub_poset), members

"""Finite posets and the order-theoretic primitives everything else consumes.

Elements are positional indices 0..n-1; labels are presentation-only.
The order relation is stored as bitmasks (``up[i]`` is the set of j with
i <= j), which keeps bound computations cheap at desk scale.
"""

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    CycleDetected,
    DuplicateLabel,
    NoTop,
    NotALattice,
    NotComparable,
    UnknownLabel,
)


def _mask_iter(mask):
    """Indices of the set bits of mask, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class Poset:
    names: tuple
    up: tuple    # up[i] = bitmask of {j : i <= j}
    down: tuple  # down[i] = bitmask of {j : j <= i}
    covers: tuple  # (lower, upper) pairs, the transitive reduction

    @property
    def n(self):
        return len(self.names)

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def leq(self, i, j):
        return bool(self.up[i] >> j & 1)

    def index(self, label):
        try:
            return self.names.index(label)
        except ValueError:
            raise UnknownLabel(str(label)) from None

    def label(self, i):
        return self.names[i]

    def top(self) -> Optional[int]:
        """The greatest element, or None if there is none."""
        full = self.full_mask
        for i in range(self.n):
            if self.down[i] == full:
                return i
        return None

    def bottom(self) -> Optional[int]:
        full = self.full_mask
        for i in range(self.n):
            if self.up[i] == full:
                return i
        return None


@dataclass(frozen=True)
class IntervalView:
    """A subset of a poset with the induced order.

    Produced by interval() for genuine intervals [a, b]; as_view() gives
    the degenerate whole-poset view used for lattice tests.
    """
    parent: Poset
    members: tuple  # ascending element indices
    lo: Optional[int] = None
    hi: Optional[int] = None

    @property
    def mask(self):
        m = 0
        for i in self.members:
            m |= 1 << i
        return m


def poset_from_leq(names, up_masks):
    """Build a Poset from a reflexive-transitive-antisymmetric relation.

    Trusts that up_masks already is a partial order; covers are recomputed.
    """
    names = tuple(names)
    n = len(names)
    up = tuple(up_masks)
    down = [0] * n
    for i in range(n):
        for j in _mask_iter(up[i]):
            down[j] |= 1 << i
    covers = []
    for i in range(n):
        for j in _mask_iter(up[i] & ~(1 << i)):
            # i -< j iff nothing sits strictly between them
            if not (up[i] & down[j] & ~(1 << i) & ~(1 << j)):
                covers.append((i, j))
    return Poset(names, up, tuple(down), tuple(covers))


def build_poset(elements, cover_pairs):
    """Construct a poset from labelled (lower, upper) pairs.

    The pairs may be redundant (non-covers); the transitive reduction is
    recomputed. Raises DuplicateLabel, UnknownLabel or CycleDetected.
    """
    names = tuple(elements)
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateLabel(str(name))
        seen.add(name)
    pos = {name: i for i, name in enumerate(names)}
    n = len(names)
    up = [1 << i for i in range(n)]
    for lo, hi in cover_pairs:
        if lo not in pos:
            raise UnknownLabel(str(lo))
        if hi not in pos:
            raise UnknownLabel(str(hi))
        up[pos[lo]] |= 1 << pos[hi]
    # reflexive-transitive closure by fixpoint iteration
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in _mask_iter(up[i]):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    for i in range(n):
        for j in _mask_iter(up[i]):
            if j != i and (up[j] >> i) & 1:
                raise CycleDetected("%s <-> %s" % (names[i], names[j]))
    return poset_from_leq(names, up)


def upper_bounds(p: Poset, xs: Iterable[int]) -> frozenset:
    xs = list(xs)
    if not xs:
        raise ValueError("empty set has no designated bounds here")
    mask = p.full_mask
    for x in xs:
        mask &= p.up[x]
    return frozenset(_mask_iter(mask))


def lower_bounds(p: Poset, xs: Iterable[int]) -> frozenset:
    xs = list(xs)
    if not xs:
        raise ValueError("empty set has no designated bounds here")
    mask = p.full_mask
    for x in xs:
        mask &= p.down[x]
    return frozenset(_mask_iter(mask))


def minimal_elements(p: Poset) -> frozenset:
    return frozenset(i for i in range(p.n) if p.down[i] == 1 << i)


def maximal_elements(p: Poset) -> frozenset:
    return frozenset(i for i in range(p.n) if p.up[i] == 1 << i)


def interval(p: Poset, a: int, b: int) -> IntervalView:
    if not p.leq(a, b):
        raise NotComparable("%s is not below %s" % (p.label(a), p.label(b)))
    members = tuple(_mask_iter(p.up[a] & p.down[b]))
    return IntervalView(p, members, a, b)


def as_view(p: Poset, members=None) -> IntervalView:
    """View over an arbitrary subset (default: the whole poset)."""
    if members is None:
        members = range(p.n)
    return IntervalView(p, tuple(sorted(members)))


def coheight(p: Poset, x: int) -> int:
    """Length of the longest chain from x up to the top element."""
    t = p.top()
    if t is None:
        raise NoTop("poset has no greatest element")
    above = {}
    for lo, hi in p.covers:
        above.setdefault(lo, []).append(hi)

    memo = {t: 0}

    def height(v):
        if v not in memo:
            memo[v] = 1 + max(height(w) for w in above[v])
        return memo[v]

    return height(x)


def _lub_in_view(v: IntervalView, x, y):
    """Least upper bound of x, y within the view, or None."""
    p = v.parent
    mask = p.up[x] & p.up[y] & v.mask
    for u in _mask_iter(mask):
        if mask & ~p.up[u] == 0:
            return u
    return None


def _glb_in_view(v: IntervalView, x, y):
    p = v.parent
    mask = p.down[x] & p.down[y] & v.mask
    for u in _mask_iter(mask):
        if mask & ~p.down[u] == 0:
            return u
    return None


def is_lattice(v: IntervalView) -> bool:
    """True iff every pair in the view has a lub and a glb within it."""
    for x in v.members:
        for y in v.members:
            if x < y:
                if _lub_in_view(v, x, y) is None:
                    return False
                if _glb_in_view(v, x, y) is None:
                    return False
    return True


def is_distributive(v: IntervalView) -> bool:
    """Direct check of x /\\ (y \\/ z) = (x /\\ y) \\/ (x /\\ z) over all triples."""
    if not is_lattice(v):
        raise NotALattice("view is not a lattice")
    join = {}
    meet = {}
    for x in v.members:
        for y in v.members:
            join[x, y] = _lub_in_view(v, x, y)
            meet[x, y] = _glb_in_view(v, x, y)
    for x in v.members:
        for y in v.members:
            for z in v.members:
                if meet[x, join[y, z]] != join[meet[x, y], meet[x, z]]:
                    return False
    return True

"""The envelope built inside the valuation ring, and its identification
with the filter lattice.

Inside the ring a virtual meet of any nonempty subset is defined by
inclusion-exclusion over its minimal elements.  The range of that
operation, paired with the filter each subset generates, bijects with
the filter lattice; the verification here checks that and the agreement
of the two inclusion-exclusion formulas for filters.

The subset range is every *nonempty* subset of the minimal elements:
restricting to proper subsets would already fail on singletons (see the
regression tests).
"""

import random
from dataclasses import dataclass
from itertools import combinations

from .birkhoff import FilterLattice, filter_lattice_as_sus, local_meet
from .errors import PairingFailure, SizeCap
from .intlinalg import solve_columns
from .report import VerificationItem
from .semilattice import Sus, irreducibles_above, wedge
from .valuation import GroupValuation, ValuationRing, build_vring, is_valuation

J_OF_CAP = 20


def minimals(s: Sus, xs) -> frozenset:
    """Minimal members of a nonempty subset."""
    xs = set(xs)
    if not xs:
        raise ValueError("empty subset")
    return frozenset(x for x in xs
                     if not any(y != x and s.base.leq(y, x) for y in xs))


def virtual_meet_pair(r: ValuationRing, x: int, y: int):
    """x + y - (x v y), the ring-side meet of a pair."""
    n = r.n
    vec = [0] * n
    vec[x] += 1
    vec[y] += 1
    vec[r.source.join[x][y]] -= 1
    return r.canonical(vec)


def _inclusion_exclusion(r: ValuationRing, elems):
    """Sum over nonempty subsets B of (-1)^(|B|+1) (join of B)."""
    s = r.source
    vec = [0] * r.n
    elems = sorted(elems)
    for size in range(1, len(elems) + 1):
        sign = 1 if size % 2 else -1
        for subset in combinations(elems, size):
            j = subset[0]
            for x in subset[1:]:
                j = s.join[j][x]
            vec[j] += sign
    return r.canonical(vec)


def virtual_meet(r: ValuationRing, xs):
    """Inclusion-exclusion meet of any nonempty subset, reduced to its
    minimal elements first."""
    return _inclusion_exclusion(r, minimals(r.source, xs))


def filter_meet_local(r: ValuationRing, e: FilterLattice, i: int):
    """Virtual meet of a filter computed from its localized meets over
    the minimal elements."""
    f = e.filters[i]
    locals_ = [local_meet(e, a, f) for a in sorted(r.source.minimals)]
    return _inclusion_exclusion_over(r, locals_)


def _inclusion_exclusion_over(r: ValuationRing, elems):
    # like _inclusion_exclusion but without the minimals reduction:
    # the two filter formulas quantify over fixed index sets
    s = r.source
    vec = [0] * r.n
    elems = list(elems)
    for size in range(1, len(elems) + 1):
        sign = 1 if size % 2 else -1
        for subset in combinations(range(len(elems)), size):
            j = elems[subset[0]]
            for k in subset[1:]:
                j = s.join[j][elems[k]]
            vec[j] += sign
    return r.canonical(vec)


def filter_meet_full(r: ValuationRing, members):
    """Virtual meet of a filter computed over all of its members."""
    members = sorted(members)
    if len(members) > J_OF_CAP:
        raise SizeCap("filter has %d members, cap is %d"
                      % (len(members), J_OF_CAP))
    return _inclusion_exclusion_over(r, members)


@dataclass(frozen=True)
class RingEnvelope:
    """The deduplicated range of the virtual meet, paired with filters."""

    ring: ValuationRing
    elements: tuple   # canonical forms, ordered by their filters
    filter_of: tuple  # elements[i] represents e.filters[filter_of[i]]

    def leq(self, e: FilterLattice, i, j) -> bool:
        # order inherited through the filter identification
        return e.leq(self.filter_of[i], self.filter_of[j])


def build_venvelope(r: ValuationRing, e: FilterLattice) -> RingEnvelope:
    """Enumerate the virtual meets of all nonempty subsets and pair them
    with the filters those subsets generate.

    Raises PairingFailure if the pairing is not a well-defined bijection
    onto the filter lattice (that would contradict the verified theory).
    """
    s = r.source
    by_filter = {}
    # every subset reduces to its antichain of minimal elements
    for bits in range(1, 1 << s.n):
        xs = [i for i in range(s.n) if bits >> i & 1]
        if minimals(s, xs) != frozenset(xs):
            continue
        form = virtual_meet(r, xs)
        generated = frozenset().union(
            *(irreducibles_above(s, x) for x in xs))
        fi = e.index(generated)
        if fi in by_filter and by_filter[fi] != form:
            raise PairingFailure(
                "subsets generating %s disagree in the ring" % e.label(fi))
        by_filter[fi] = form
    if len(by_filter) != e.size:
        raise PairingFailure("virtual meets cover %d of %d filters"
                             % (len(by_filter), e.size))
    if len(set(by_filter.values())) != e.size:
        raise PairingFailure("virtual meets of distinct filters collide")
    order = sorted(by_filter)
    return RingEnvelope(
        ring=r,
        elements=tuple(by_filter[i] for i in order),
        filter_of=tuple(order),
    )


def irreducible_coordinates(r: ValuationRing, targets):
    """Coordinates of canonical forms on the basis of irreducible classes.

    Returns one tuple (aligned with sorted(irreducibles)) per target, or
    None where no integral coordinates exist.
    """
    irr = sorted(r.source.irreducibles)
    columns = [r.restrict(r.embed(m)) for m in irr]
    return solve_columns(columns, [r.restrict(t) for t in targets])


def _lift_restrict_ok(s, e, d, coords, basis_elements, f: GroupValuation):
    """Lift a valuation on s to the filter lattice through the
    irreducible basis, then restrict along the embedding and compare.

    basis_elements aligns the coordinate slots with source irreducibles.
    """
    lifted = []
    for i in range(e.size):
        if coords[i] is None:
            return "filter %s has no integral coordinates" % e.label(i)
        lifted.append(f.norm(sum(c * f.values[m]
                                 for c, m in zip(coords[i],
                                                 basis_elements))))
    if not is_valuation(d, GroupValuation(f.modulus, tuple(lifted))):
        return "lift is not a valuation on the filter lattice"
    for x in range(s.n):
        if f.norm(lifted[e.filter_of_element[x]] - f.values[x]):
            return "restriction differs from the original at %s" \
                % s.label(x)
    return None


def check_equivalence(r: ValuationRing, e: FilterLattice,
                      d: Sus = None, seed: int = 0) -> VerificationItem:
    """The two envelopes coincide.

    Checks, on this instance: the two filter formulas and the subset
    formula agree; the virtual-meet range bijects order-compatibly with
    the filter lattice; both rings have rank equal to the irreducible
    count; the filter lattice's irreducibles are exactly the embedded
    ones; and sampled valuations lift through the irreducible basis and
    restrict back to themselves.
    """
    name = "envelope_agreement"
    s = r.source
    if d is None:
        d = filter_lattice_as_sus(e)

    # (1) the two filter formulas agree with the subset formula
    for i, f in enumerate(e.filters):
        via_locals = filter_meet_local(r, e, i)
        via_members = filter_meet_full(r, f)
        via_subset = virtual_meet(r, f)
        if not via_locals == via_members == via_subset:
            return VerificationItem(
                name, False, "filter formulas disagree at %s" % e.label(i))

    # (2) + (3) bijection and order compatibility
    try:
        venv = build_venvelope(r, e)
    except PairingFailure as exc:
        return VerificationItem(name, False, str(exc))
    for i in range(e.size):
        for j in range(e.size):
            if d.base.leq(i, j) != e.leq(i, j):
                return VerificationItem(
                    name, False, "filter order mismatch at %s, %s"
                    % (e.label(i), e.label(j)))
    assert venv.filter_of == tuple(range(e.size))

    # (4) equal ranks
    rd = build_vring(d)
    if not (r.rank == rd.rank == len(s.irreducibles)):
        return VerificationItem(
            name, False, "ranks differ: %d vs %d vs %d irreducibles"
            % (r.rank, rd.rank, len(s.irreducibles)))

    # (5) irreducibles transfer along the embedding
    embedded = frozenset(e.filter_of_element[m]
                         for m in s.irreducibles)
    if d.irreducibles != embedded:
        return VerificationItem(
            name, False, "filter-lattice irreducibles are not the "
            "embedded ones")

    # (6) sampled valuations lift and restrict back.  Coordinates are on
    # the irreducible classes of the filter lattice; align each slot
    # with the source irreducible that embeds onto it.
    coords = irreducible_coordinates(
        rd, [rd.embed(i) for i in range(e.size)])
    filter_to_element = {e.filter_of_element[x]: x for x in range(s.n)}
    basis_elements = [filter_to_element[i] for i in sorted(d.irreducibles)]
    rng = random.Random(seed)
    samples = [GroupValuation(0, (3,) * s.n)]
    from .valuation import prime_filter_valuations
    for pf in prime_filter_valuations(d):
        samples.append(GroupValuation(
            2, tuple(pf.values[e.filter_of_element[x]]
                     for x in range(s.n))))
    for _ in range(3):
        assigned = [rng.randint(-5, 5) for _ in basis_elements]
        values = []
        for x in range(s.n):
            cx = coords[e.filter_of_element[x]]
            if cx is None:
                return VerificationItem(
                    name, False, "no integral coordinates for an "
                    "embedded element")
            values.append(sum(c * g for c, g in zip(cx, assigned)))
        samples.append(GroupValuation(0, tuple(values)))
    for f in samples:
        if not is_valuation(s, f):
            return VerificationItem(
                name, False, "a sampled function is not a valuation")
        problem = _lift_restrict_ok(s, e, d, coords, basis_elements, f)
        if problem:
            return VerificationItem(name, False, problem)
    return VerificationItem(name, True)


def check_inclusion_exclusion(r: ValuationRing) -> VerificationItem:
    """Whenever a subset has a greatest lower bound, its virtual meet is
    the class of that bound (checked over every subset)."""
    name = "inclusion_exclusion"
    s = r.source
    for bits in range(1, 1 << s.n):
        xs = [i for i in range(s.n) if bits >> i & 1]
        lb = s.base.full_mask
        for x in xs:
            lb &= s.base.down[x]
        if not lb:
            continue
        if virtual_meet(r, xs) != r.embed(wedge(s, xs)):
            return VerificationItem(
                name, False, "virtual meet differs from the glb of {%s}"
                % ",".join(str(s.label(x)) for x in xs))
    return VerificationItem(name, True)

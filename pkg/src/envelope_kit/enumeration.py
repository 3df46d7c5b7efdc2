"""Exhaustive generation of all small instances and the verification
suite orchestration: the project's brute-force oracle.

Posets are generated up to isomorphism by repeatedly adjoining a new
maximal element above each order ideal of a smaller poset; canonical
forms (invariant refinement, then minimal relabelling) deduplicate.
A second, independent generator counts labelled posets directly by
filtering orientation assignments, validating the first for small n.
"""

import hashlib
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

from .birkhoff import (
    build_envelope,
    check_embedding,
    check_local_meets,
    check_universal,
    constant_top_hom,
    extension_preserves_bottom,
    filter_lattice_as_sus,
    nu_hom,
    semi_hom,
)
from .envelope import check_equivalence, check_inclusion_exclusion
from .errors import EnvelopeKitError, SizeCap
from .instances import boolean_sus
from .order import Poset, poset_from_leq
from .report import VerificationReport, combine
from .semilattice import (
    Sus,
    check_irreducible_meets,
    check_next_irreducible,
    irreducibles_above,
    validate_sus,
)
from .valuation import (
    build_vring,
    check_basis,
    check_ideal,
    check_infinite_order,
    check_iota_injective,
    check_prime_filter_separation,
    check_retract,
)

MAX_N = 7


def _refine_classes(up, n):
    """Ordered partition of the elements by iterated order invariants."""
    inv = [(bin(up[i]).count("1"),) for i in range(n)]
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if up[j] >> i & 1:
                down[i] |= 1 << j
    inv = [(inv[i], bin(down[i]).count("1")) for i in range(n)]
    for _ in range(2):
        inv = [
            (inv[i],
             tuple(sorted(inv[j] for j in range(n) if up[i] >> j & 1)),
             tuple(sorted(inv[j] for j in range(n) if down[i] >> j & 1)))
            for i in range(n)
        ]
    buckets = {}
    for i in range(n):
        buckets.setdefault(inv[i], []).append(i)
    return [buckets[key] for key in sorted(buckets)]


def canonical_key(up, n):
    """Lexicographically minimal relabelling of the relation bitmasks,
    searching only permutations consistent with the invariant classes."""
    classes = _refine_classes(up, n)
    best = None
    for perms in product(*(permutations(c) for c in classes)):
        relabel = [None] * n
        pos = 0
        for group in perms:
            for old in group:
                relabel[old] = pos
                pos += 1
        key = [0] * n
        for i in range(n):
            mask = 0
            m = up[i]
            while m:
                low = m & -m
                mask |= 1 << relabel[low.bit_length() - 1]
                m ^= low
            key[relabel[i]] = mask
        key = tuple(key)
        if best is None or key < best:
            best = key
    return best


def instance_id(p: Poset) -> str:
    key = canonical_key(p.up, p.n)
    digest = hashlib.sha256(repr((p.n, key)).encode()).hexdigest()
    return digest[:16]


def _down_sets(up, n):
    """All down-closed subsets (as bitmasks), including the empty one."""
    out = []
    for bits in range(1 << n):
        ok = True
        for i in range(n):
            if bits >> i & 1:
                # everything below i must be included
                for j in range(n):
                    if up[j] >> i & 1 and not bits >> j & 1:
                        ok = False
                        break
            if not ok:
                break
        if ok:
            out.append(bits)
    return out


@lru_cache(maxsize=None)
def _poset_keys(n):
    """Canonical relation keys of all posets on n elements, up to iso."""
    if n == 1:
        return [(1,)]
    keys = set()
    for smaller in _poset_keys(n - 1):
        for ideal in _down_sets(smaller, n - 1):
            up = [smaller[i] | ((1 << (n - 1)) if ideal >> i & 1 else 0)
                  for i in range(n - 1)]
            up.append(1 << (n - 1))
            keys.add(canonical_key(up, n))
    return sorted(keys)


def gen_posets(n, up_to_iso=True):
    """All posets on n elements, one per isomorphism class by default."""
    if not 1 <= n <= MAX_N:
        raise SizeCap("poset generation is capped at n <= %d" % MAX_N)
    names = tuple("e%d" % i for i in range(n))
    if up_to_iso:
        for key in _poset_keys(n):
            yield poset_from_leq(names, key)
    else:
        seen = set()
        for key in _poset_keys(n):
            for perm in permutations(range(n)):
                up = [0] * n
                for i in range(n):
                    mask = 0
                    for j in range(n):
                        if key[i] >> j & 1:
                            mask |= 1 << perm[j]
                    up[perm[i]] = mask
                labelled = tuple(up)
                if labelled not in seen:
                    seen.add(labelled)
                    yield poset_from_leq(names, labelled)


def count_posets_direct(n):
    """Labelled poset count by brute force over pair orientations.

    Independent of the generator above: each unordered pair is assigned
    incomparable / < / >, and the resulting relation is kept iff it is
    transitive.  Intended for n <= 5.
    """
    if n == 0:
        return 1
    pairs = list(combinations(range(n), 2))
    count = 0
    for choice in product((0, 1, 2), repeat=len(pairs)):
        up = [1 << i for i in range(n)]
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                up[i] |= 1 << j
            elif c == 2:
                up[j] |= 1 << i
        ok = True
        for i in range(n):
            acc = up[i]
            m = up[i]
            while m:
                low = m & -m
                acc |= up[low.bit_length() - 1]
                m ^= low
            if acc != up[i]:
                ok = False
                break
        if ok:
            count += 1
    return count


def gen_dsus(n):
    """All distributive strong upper semilattices on n elements, up to
    isomorphism, in deterministic order."""
    for p in gen_posets(n, up_to_iso=True):
        try:
            yield validate_sus(p)
        except EnvelopeKitError:
            continue


def _padded_boolean_hom(s: Sus):
    """Embed into a Boolean lattice with one padding atom below the whole
    image; the extension to the filter lattice then never reaches the
    Boolean bottom, exhibiting that least elements need not be preserved."""
    irr = sorted(s.irreducibles - {s.top})
    k = len(irr) + 1
    codomain = boolean_sus(k)
    pad = 1 << (k - 1)
    mapping = []
    for x in range(s.n):
        above = irreducibles_above(s, x)
        bits = pad
        for slot, m in enumerate(irr):
            if m not in above:
                bits |= 1 << slot
        mapping.append(bits)
    return semi_hom(s, codomain, mapping)


def run_suite(s: Sus, seed: int = 0) -> VerificationReport:
    """Run every registered lemma check on one instance."""
    report = VerificationReport(instance_id=instance_id(s.base))

    def run(fn, name=None):
        start = time.perf_counter()
        item = fn()
        if name:
            item.name = name
        report.add(item, time.perf_counter() - start)

    run(lambda: check_irreducible_meets(s))
    run(lambda: check_next_irreducible(s))

    e = build_envelope(s)
    d = filter_lattice_as_sus(e)
    run(lambda: check_embedding(e))
    run(lambda: check_local_meets(e))

    run(lambda: check_universal(e, nu_hom(e, d)), "universal_identity")
    boolean_hom = _padded_boolean_hom(s)
    run(lambda: check_universal(e, boolean_hom), "universal_boolean")
    report.notes["bottom_caveat_exhibited"] = (
        not extension_preserves_bottom(e, boolean_hom))
    run(lambda: check_universal(e, constant_top_hom(s, boolean_sus(1))),
        "universal_constant")

    r = build_vring(s)
    run(lambda: check_ideal(r))
    run(lambda: check_iota_injective(r))
    run(lambda: check_infinite_order(r))
    run(lambda: check_basis(r))
    run(lambda: combine("interval_retracts",
                        [check_retract(r, a) for a in sorted(s.minimals)]))
    run(lambda: check_prime_filter_separation(s))
    run(lambda: check_inclusion_exclusion(r))
    run(lambda: check_equivalence(r, e, d=d, seed=seed))
    return report


@dataclass
class SweepSummary:
    max_n: int
    seed: int
    instances_per_size: dict = field(default_factory=dict)
    reports: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def instance_count(self):
        return sum(self.instances_per_size.values())

    @property
    def failure_count(self):
        return sum(len(r.failures()) for r in self.reports)

    @property
    def caveat_count(self):
        return sum(1 for r in self.reports
                   if r.notes.get("bottom_caveat_exhibited"))

    def as_dict(self, include_timings=False):
        return {
            "max_n": self.max_n,
            "seed": self.seed,
            "instances_per_size": {
                str(k): v for k, v in sorted(self.instances_per_size.items())
            },
            "instance_count": self.instance_count,
            "failure_count": self.failure_count,
            "bottom_caveat_instances": self.caveat_count,
            "reports": [r.as_dict(include_timings) for r in self.reports],
        }


def _suite_worker(args):
    up, n, seed = args
    names = tuple("e%d" % i for i in range(n))
    s = validate_sus(poset_from_leq(names, up))
    return run_suite(s, seed=seed)


def sweep(max_n: int, jobs: int = 1, seed: int = 0) -> SweepSummary:
    """Run the full suite over every instance of size <= max_n."""
    if not 1 <= max_n <= MAX_N:
        raise SizeCap("sweep is capped at max_n <= %d" % MAX_N)
    start = time.perf_counter()
    summary = SweepSummary(max_n=max_n, seed=seed)
    work = []
    for n in range(1, max_n + 1):
        count = 0
        for s in gen_dsus(n):
            work.append((tuple(s.base.up), n, seed))
            count += 1
        summary.instances_per_size[n] = count
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_suite_worker, work))
    else:
        reports = [_suite_worker(item) for item in work]
    summary.reports = sorted(reports, key=lambda r: r.instance_id)
    summary.elapsed = time.perf_counter() - start
    return summary

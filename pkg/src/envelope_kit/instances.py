"""Named small instances used by tests, demos and the verification suite."""

from functools import lru_cache

from .order import build_poset, poset_from_leq
from .semilattice import validate_sus


def chain_poset(k):
    """The k-element chain 0 < 1 < ... < k-1."""
    names = [str(i) for i in range(k)]
    return build_poset(names, [(names[i], names[i + 1])
                               for i in range(k - 1)])


def v3_poset():
    """Two incomparable elements under a common top."""
    return build_poset(["a", "b", "1"], [("a", "1"), ("b", "1")])


def b2_poset():
    """The four-element Boolean lattice (diamond)."""
    return build_poset(["0", "a", "b", "1"],
                       [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def k4_poset():
    """Two incomparable elements under a two-step chain to the top."""
    return build_poset(["a", "b", "t", "1"],
                       [("a", "t"), ("b", "t"), ("t", "1")])


def m3_poset():
    """Three coatoms over a bottom: the modular non-distributive lattice."""
    return build_poset(["0", "p", "q", "r", "1"],
                       [("0", "p"), ("0", "q"), ("0", "r"),
                        ("p", "1"), ("q", "1"), ("r", "1")])


def n5_poset():
    """The pentagon: the non-modular five-element lattice."""
    return build_poset(["0", "a", "b", "c", "1"],
                       [("0", "a"), ("a", "1"), ("0", "b"),
                        ("b", "c"), ("c", "1")])


def fan_poset(k):
    """k incomparable minimal elements under a single top."""
    names = ["m%d" % i for i in range(k)] + ["1"]
    return build_poset(names, [(n, "1") for n in names[:-1]])


@lru_cache(maxsize=None)
def boolean_sus(k):
    """The Boolean lattice on k atoms as a validated semilattice.

    Element i is the subset of atoms with bitmask i, so joins and meets
    are bitwise or/and.  Cached: the verification suite reuses a handful
    of sizes many times.
    """
    size = 1 << k
    names = tuple(
        "{%s}" % ",".join("A%d" % i for i in range(k) if bits >> i & 1)
        for bits in range(size))
    up = [0] * size
    for x in range(size):
        for y in range(size):
            if x | y == y:
                up[x] |= 1 << y
    return validate_sus(poset_from_leq(names, up))


NAMED_POSETS = {
    "v3": v3_poset,
    "b2": b2_poset,
    "k4": k4_poset,
    "m3": m3_poset,
    "n5": n5_poset,
}

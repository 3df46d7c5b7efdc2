"""Independent oracles used to cross-check the library's computations.

These deliberately avoid the code paths they validate: distributivity by
forbidden-sublattice search instead of the direct law, greatest lower
bounds straight from the order relation instead of the meet table, and
filter counting by antichain enumeration instead of up-set filtering.
"""

from itertools import combinations

from envelope_kit.order import IntervalView, _mask_iter


def _closed_ops(view: IntervalView):
    p = view.parent
    join = {}
    meet = {}
    for x in view.members:
        for y in view.members:
            jmask = p.up[x] & p.up[y] & view.mask
            j = next((u for u in _mask_iter(jmask)
                      if jmask & ~p.up[u] == 0), None)
            mmask = p.down[x] & p.down[y] & view.mask
            m = next((u for u in _mask_iter(mmask)
                      if mmask & ~p.down[u] == 0), None)
            join[x, y] = j
            meet[x, y] = m
    return join, meet


def _is_m3_or_n5(p, subset, join, meet):
    bot = subset[0]
    top = subset[0]
    for x in subset:
        bot = meet[bot, x]
        top = join[top, x]
    if bot not in subset or top not in subset:
        return False
    mids = [x for x in subset if x != bot and x != top]
    if len(mids) != 3:
        return False
    comparable = [(x, y) for x, y in combinations(mids, 2)
                  if p.leq(x, y) or p.leq(y, x)]
    if len(comparable) == 0:
        # diamond shape: all proper pairs bound by bot/top
        return all(join[x, y] == top and meet[x, y] == bot
                   for x, y in combinations(mids, 2))
    if len(comparable) == 1:
        (x, y) = comparable[0]
        z = next(m for m in mids if m not in (x, y))
        return (join[x, z] == top and join[y, z] == top
                and meet[x, z] == bot and meet[y, z] == bot)
    return False


def distributive_by_forbidden_sublattice(view: IntervalView) -> bool:
    """A lattice is distributive iff no five-element subset closed under
    its meet and join has the diamond or pentagon shape."""
    join, meet = _closed_ops(view)
    for subset in combinations(view.members, 5):
        sset = set(subset)
        if any(join[x, y] not in sset or meet[x, y] not in sset
               for x, y in combinations(subset, 2)):
            continue
        if _is_m3_or_n5(view.parent, subset, join, meet):
            return False
    return True


def glb_by_order_scan(p, xs):
    """Greatest lower bound straight from the relation, or None."""
    lbs = [u for u in range(p.n) if all(p.leq(u, x) for x in xs)]
    glbs = [m for m in lbs if all(p.leq(u, m) for u in lbs)]
    assert len(glbs) <= 1
    return glbs[0] if glbs else None


def count_nonempty_up_sets_by_antichains(p, members) -> int:
    """Up-sets of the induced subposet correspond to antichains (their
    minimal elements); the empty up-set pairs with the empty antichain."""
    members = list(members)
    antichains = 0
    for size in range(len(members) + 1):
        for subset in combinations(members, size):
            if all(not (p.leq(x, y) or p.leq(y, x))
                   for x, y in combinations(subset, 2)):
                antichains += 1
    return antichains - 1

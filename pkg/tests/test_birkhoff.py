import pytest
from oracles import count_nonempty_up_sets_by_antichains

from envelope_kit.birkhoff import (
    build_envelope,
    check_embedding,
    check_local_meets,
    check_universal,
    constant_top_hom,
    extend_hom,
    extension_preserves_bottom,
    filter_lattice_as_sus,
    local_meet,
    nu_hom,
    semi_hom,
    to_filter,
)
from envelope_kit.enumeration import _padded_boolean_hom, gen_dsus
from envelope_kit.errors import FlagsNotVerified, NotMinimal, SizeCap
from envelope_kit.instances import boolean_sus, fan_poset
from envelope_kit.semilattice import validate_sus, wedge


def test_filter_enumeration(v3, b2, k4, chain3):
    for s, size in ((v3, 4), (b2, 4), (k4, 5), (chain3, 3)):
        e = build_envelope(s)
        assert e.size == size
    e = build_envelope(v3)
    assert {e.label(i) for i in range(e.size)} \
        == {"{1}", "{a,1}", "{b,1}", "{a,b,1}"}
    assert e.label(e.bottom) == "{a,b,1}"
    assert e.label(e.top_filter) == "{1}"


def test_filter_lattice_operations(v3):
    e = build_envelope(v3)
    fa = e.index({v3.base.index("a"), v3.top})
    fb = e.index({v3.base.index("b"), v3.top})
    assert e.join(fa, fb) == e.top_filter
    assert e.meet(fa, fb) == e.bottom
    assert e.leq(e.bottom, fa) and not e.leq(fa, fb)
    with pytest.raises(KeyError):
        e.index({v3.base.index("a")})  # not upward closed


def test_to_filter(b2):
    e = build_envelope(b2)
    z = b2.base.index("0")
    assert to_filter(e, z) == frozenset(
        {b2.base.index("a"), b2.base.index("b"), b2.top})
    assert to_filter(e, b2.top) == frozenset({b2.top})


def test_embedding_check(v3, b2, k4, chain3):
    for s in (v3, b2, k4, chain3):
        assert check_embedding(build_envelope(s)).passed


def test_filter_count_matches_antichain_oracle():
    for n in range(1, 6):
        for s in gen_dsus(n):
            e = build_envelope(s)
            assert e.size == count_nonempty_up_sets_by_antichains(
                s.base, sorted(s.irreducibles))


def test_local_meet(v3, b2):
    a = v3.base.index("a")
    b = v3.base.index("b")
    e = build_envelope(v3)
    assert local_meet(e, a, {a, b, v3.top}) == a
    assert local_meet(e, a, {b, v3.top}) == v3.top
    assert local_meet(e, a, {v3.top}) == v3.top
    eb = build_envelope(b2)
    z = b2.base.index("0")
    assert local_meet(eb, z, to_filter(eb, z)) == z
    with pytest.raises(NotMinimal):
        local_meet(eb, b2.base.index("a"), {b2.top})


def test_local_meet_recovers_elements_above(b2):
    # for x >= a the localized meet of nu(x) at a gives x back
    e = build_envelope(b2)
    for a in sorted(b2.minimals):
        for x in range(b2.n):
            if b2.base.leq(a, x):
                assert local_meet(e, a, to_filter(e, x)) == x


def test_local_meets_check(v3, b2, k4, chain3):
    for s in (v3, b2, k4, chain3):
        assert check_local_meets(build_envelope(s)).passed


def test_extend_hom_of_embedding_is_identity(v3):
    e = build_envelope(v3)
    d = filter_lattice_as_sus(e)
    hat = extend_hom(e, nu_hom(e, d))
    assert hat == tuple(range(e.size))


def test_extend_hom_rejects_unverified_maps(v3, b2):
    # send everything to the bottom: joins with the top are not preserved
    bad = semi_hom(v3, b2, (b2.base.index("0"),) * v3.n)
    assert not bad.verified
    e = build_envelope(v3)
    with pytest.raises(FlagsNotVerified):
        extend_hom(e, bad)


def test_universal_property(v3, b2, k4, chain3):
    for s in (v3, b2, k4, chain3):
        e = build_envelope(s)
        d = filter_lattice_as_sus(e)
        assert check_universal(e, nu_hom(e, d)).passed
        assert check_universal(e, _padded_boolean_hom(s)).passed
        assert check_universal(e, constant_top_hom(s, boolean_sus(1))).passed


def test_extension_need_not_preserve_bottom(v3):
    # the inclusion of the V-shape into the padded Boolean lattice
    # extends to a lattice map that misses the Boolean bottom
    e = build_envelope(v3)
    h = _padded_boolean_hom(v3)
    assert h.verified
    assert check_universal(e, h).passed
    assert not extension_preserves_bottom(e, h)
    # while the extension of the embedding itself does hit its bottom
    d = filter_lattice_as_sus(e)
    assert extension_preserves_bottom(e, nu_hom(e, d))


def test_filter_lattice_as_sus_is_distributive_lattice(v3, k4):
    for s in (v3, k4):
        d = filter_lattice_as_sus(build_envelope(s))
        assert d.is_lattice()
        assert d.distributive


def test_filter_lattice_irreducible_meet_structure(v3, b2, k4):
    # inside the filter lattice every filter is the meet (union) of the
    # principal filters of its members
    for s in (v3, b2, k4):
        e = build_envelope(s)
        d = filter_lattice_as_sus(e)
        for i, f in enumerate(e.filters):
            assert wedge(d, [e.filter_of_element[m] for m in sorted(f)]) == i


def test_size_cap(monkeypatch):
    s = validate_sus(fan_poset(4))  # five irreducibles: four minimals + top
    monkeypatch.setenv("ENVELOPE_KIT_SIZE_CAP", "4")
    with pytest.raises(SizeCap):
        build_envelope(s)
    monkeypatch.setenv("ENVELOPE_KIT_SIZE_CAP", "5")
    # nonempty atom subsets joined with the top, plus {top} itself
    assert build_envelope(s).size == 15 + 1


def test_default_cap_allows_small_instances(monkeypatch, b2):
    monkeypatch.delenv("ENVELOPE_KIT_SIZE_CAP", raising=False)
    assert build_envelope(b2).size == 4

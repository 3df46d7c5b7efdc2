"""Envelopes of finite distributive strong upper semilattices.

Two constructions of the distributive-lattice envelope -- the lattice of
order filters of the meet-irreducible poset, and the range of the
inclusion-exclusion meet inside the valuation ring -- plus machinery
that verifies, exhaustively on all small instances, that every structural
lemma holds and that the two envelopes are isomorphic.
"""

from .birkhoff import (
    FilterLattice,
    SemiHom,
    build_envelope,
    check_embedding,
    check_local_meets,
    check_universal,
    extend_hom,
    filter_lattice_as_sus,
    local_meet,
    semi_hom,
    to_filter,
)
from .envelope import (
    RingEnvelope,
    build_venvelope,
    check_equivalence,
    check_inclusion_exclusion,
    filter_meet_full,
    filter_meet_local,
    minimals,
    virtual_meet,
    virtual_meet_pair,
)
from .enumeration import gen_dsus, gen_posets, run_suite, sweep
from .errors import EnvelopeKitError
from .order import (
    IntervalView,
    Poset,
    as_view,
    build_poset,
    coheight,
    interval,
    is_distributive,
    is_lattice,
    lower_bounds,
    minimal_elements,
    upper_bounds,
)
from .report import VerificationItem, VerificationReport
from .semilattice import (
    Sus,
    check_irreducible_meets,
    check_next_irreducible,
    interval_sus,
    irreducibles_above,
    meet_irreducibles,
    next_irreducible,
    validate_sus,
    wedge,
)
from .valuation import (
    GroupValuation,
    RelationIdeal,
    ValuationRing,
    build_vring,
    check_basis,
    check_ideal,
    check_infinite_order,
    check_iota_injective,
    check_retract,
    induced_hom,
    induced_ring_map,
    is_valuation,
    prime_filter_valuations,
    relation_generators,
)

__version__ = "0.1.0"

"""Exception hierarchy shared by the whole package."""


class EnvelopeKitError(Exception):
    """Base class for all errors raised by envelope_kit."""


class ParseError(EnvelopeKitError):
    """Instance document is malformed."""


class DuplicateLabel(EnvelopeKitError):
    pass


class UnknownLabel(EnvelopeKitError):
    pass


class CycleDetected(EnvelopeKitError):
    pass


class NotComparable(EnvelopeKitError):
    pass


class NoTop(EnvelopeKitError):
    pass


class NotALattice(EnvelopeKitError):
    pass


class JoinMissing(EnvelopeKitError):
    pass


class StrongConditionFails(EnvelopeKitError):
    """A pair with a common lower bound has no greatest lower bound."""


class IntervalNotDistributive(EnvelopeKitError):
    def __init__(self, lo, hi):
        self.lo = lo
        self.hi = hi
        super().__init__("IntervalNotDistributive(%s,%s)" % (lo, hi))


class NoLowerBound(EnvelopeKitError):
    pass


class NotMeetIrreducible(EnvelopeKitError):
    pass


class IsTop(EnvelopeKitError):
    pass


class NotMinimal(EnvelopeKitError):
    pass


class FlagsNotVerified(EnvelopeKitError):
    """A semilattice map failed one of its preservation checks."""


class NotWellDefined(EnvelopeKitError):
    """A relation generator does not map to zero in the target ring."""


class NotAValuation(EnvelopeKitError):
    pass


class SizeCap(EnvelopeKitError):
    """Input exceeds the configured materialization limit."""


class PairingFailure(EnvelopeKitError):
    """The ring envelope does not biject with the filter lattice."""

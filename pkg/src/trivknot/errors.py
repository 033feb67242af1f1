"""Exception hierarchy shared by all modules."""


class KnotError(ValueError):
    """Base class for every error raised by this package."""


class GaussSyntaxError(KnotError):
    """A token of a code or word could not be parsed."""


class StructureError(KnotError):
    """The parsed tokens violate the double-occurrence invariants."""


class Unrealizable(KnotError):
    """A signed Gauss code does not describe a knot diagram on the sphere."""


class TooLarge(KnotError):
    """The brute-force oracle was asked for too many chords."""


class NotAKnot(KnotError):
    """A generated diagram has more than one component."""


class HypothesisViolated(KnotError):
    """A pretzel word does not have the required parity pattern."""


class NotUniformError(KnotError):
    """A 2-bridge word whose standard diagram has mixed crossing signs."""


class NonIntegral(KnotError):
    """The signature formula produced a non-integer."""


class NotAlternating(KnotError):
    pass


class NotReduced(KnotError):
    pass


class CertificateMismatch(KnotError):
    """A family certificate disagrees with the computed diagram value."""

"""Exception hierarchy for ringlab."""


class RingLabError(Exception):
    pass


class RingAxiomError(RingLabError):
    """A structure-constant table violates a ring axiom."""

    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


class AssociativityViolation(RingAxiomError):
    pass


class UnitViolation(RingAxiomError):
    pass


class OrderIncompatibility(RingAxiomError):
    pass


class ModuleAxiomError(RingLabError):
    pass


class ParseError(RingLabError):
    pass


class NotIrreducible(RingLabError):
    pass


class NotTwoSidedIdeal(RingLabError):
    pass


class NotASubmodule(RingLabError):
    pass


class DifferentBaseRings(RingLabError):
    pass


class SizeCutoffExceeded(RingLabError):
    def __init__(self, size, cutoff):
        super().__init__(f"module of size {size} exceeds the module-size cutoff {cutoff}")
        self.size = size
        self.cutoff = cutoff


class EnumerationCutoffExceeded(RingLabError):
    def __init__(self, count, cutoff):
        super().__init__(f"hom set of size {count} exceeds the hom-size cutoff {cutoff}")
        self.count = count
        self.cutoff = cutoff


class TopDecompositionFailure(RingLabError):
    pass


class SemilocalHypothesisViolated(RingLabError):
    pass


class FixpointDivergence(RingLabError):
    pass


class UnknownSuite(RingLabError):
    pass


class IoError(RingLabError, OSError):
    def __init__(self, path, reason):
        super().__init__(f"cannot write report to {path}: {reason}")
        self.path = str(path)

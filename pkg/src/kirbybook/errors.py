"""Exception hierarchy shared by every stage of the engine."""


class KirbyError(ValueError):
    """Base class; ``tag`` names the pipeline step that failed, if any."""

    tag = None

    def __init__(self, message, tag=None):
        super().__init__(message)
        if tag is not None:
            self.tag = tag


# parsing
class MalformedSyllable(KirbyError):
    pass


class StrandOutOfRange(KirbyError):
    pass


class ZeroExponent(KirbyError):
    pass


# moves
class UnknownTarget(KirbyError):
    pass


class NotUnitFramed(KirbyError):
    pass


class OrphanedNesting(KirbyError):
    pass


class NoPendingSyllable(KirbyError):
    pass


class NonUnitExponent(KirbyError):
    pass


class WrongFraming(KirbyError):
    pass


# pipelines
class HypothesisViolated(KirbyError):
    pass


class PipelineInvariantViolated(KirbyError):
    pass


# open book extraction
class NotNormalized(KirbyError):
    pass


class UnplaceableCircle(KirbyError):
    pass


class TraceMismatch(KirbyError):
    """A recorded move does not fit the diagram it is replayed on."""

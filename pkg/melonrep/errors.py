"""
Exceptions raised by melonrep.
"""


class MelonrepError(Exception):
    pass


class SpecInvalidError(MelonrepError, ValueError):
    pass


class UnknownVertexError(MelonrepError, ValueError):
    pass


class EmptyEdgeSetError(MelonrepError, ValueError):
    pass


class SizeGuardError(MelonrepError):
    """
    Input exceeds the configured bound of an exhaustive search.
    """


class NotInFamilyError(MelonrepError, ValueError):
    pass


class PreconditionError(MelonrepError, ValueError):
    pass


class UnknownLetterError(MelonrepError, ValueError):
    pass


class MissingLetterError(MelonrepError, ValueError):
    pass


class EmptyWordError(MelonrepError, ValueError):
    pass


class NotComparabilityError(MelonrepError):
    pass


class NotWordRepresentableError(MelonrepError):
    pass


class SearchBudgetExceededError(MelonrepError):
    pass


class NodeLimitExceededError(SearchBudgetExceededError):
    """
    A search was interrupted by its node limit.
    Distinct from a search that finished and found nothing.
    """


class ConstructionError(MelonrepError):
    """
    A constructed certificate failed verification.
    Always a bug.
    """


class FormatError(MelonrepError, ValueError):
    pass

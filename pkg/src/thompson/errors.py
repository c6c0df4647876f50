from typing import Optional


class ThompsonError(Exception):
    """Base class for every error raised by the package."""


class ArityMismatchError(ThompsonError, ValueError):
    pass


class LeafIndexError(ThompsonError, IndexError):
    pass


class NegativeIndexError(ThompsonError, ValueError):
    pass


class NotAnInvolutionError(ThompsonError, ValueError):
    pass


class UnreducedPairError(ThompsonError, ValueError):
    pass


class MalformedDiagramError(ThompsonError, RuntimeError):
    pass


class WalkBoundExceededError(ThompsonError, RuntimeError):
    """A path walk ran past twice the edge count; the tree is malformed."""


class UnsupportedFormatError(ThompsonError, ValueError):
    pass


class IncompatibleRecordsError(ThompsonError, ValueError):
    pass


class ParseError(ThompsonError, ValueError):
    def __init__(self, message: str, token: Optional[str] = None):
        super().__init__(message)
        self.token = token


class OracleMismatchError(ThompsonError):
    def __init__(self, message: str, word=None, orbits: int = 0, components: int = 0):
        super().__init__(message)
        self.word = word
        self.orbits = orbits
        self.components = components

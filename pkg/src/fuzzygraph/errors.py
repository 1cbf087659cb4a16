"""Exception hierarchy for the fuzzy-graph toolkit."""


class FuzzyGraphError(Exception):
    """Base class for every error raised by this package."""


class GraphConstructionError(FuzzyGraphError):
    """A graph description violates a structural invariant."""


class DuplicateVertexError(GraphConstructionError):
    pass


class DuplicateEdgeError(GraphConstructionError):
    pass


class SelfLoopError(GraphConstructionError):
    pass


class UnknownEndpointError(GraphConstructionError):
    pass


class MuExceedsSigmaError(GraphConstructionError):
    """Edge grade above the minimum of its endpoint grades."""


class ZeroMuError(GraphConstructionError):
    """Zero edge grades are rejected rather than silently dropped."""


class ParseError(FuzzyGraphError):
    """Malformed .fzg input; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NoSuchEdgeError(FuzzyGraphError):
    pass


class DisconnectedError(FuzzyGraphError):
    """Operation requires a crisp-connected graph."""


class StrongDisconnectedError(FuzzyGraphError):
    """Some vertex pair has no path consisting of strong edges."""


class TooLargeError(FuzzyGraphError):
    """Brute-force reference refuses graphs past its size guard."""


class BadSpecError(FuzzyGraphError):
    """Rejected SaturatedCycleSpec parameters: bad length or grades."""


class BadParamsError(FuzzyGraphError):
    pass


class NotAFuzzyTreeError(FuzzyGraphError):
    pass

"""Exception hierarchy shared by every module."""


class ArtinError(Exception):
    """Base class for all errors raised by this package."""


class GraphInputError(ArtinError, ValueError):
    """Malformed graph data or a vertex that is not in the graph."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvariantError(ArtinError, RuntimeError):
    """An internal consistency check failed; this is a bug, not bad input."""


class ContractViolation(ArtinError, RuntimeError):
    """A function was called outside its documented precondition."""


class SplittingError(ArtinError, ValueError):
    """A pair (X, Y) does not define a non-trivial visual splitting."""


class CoverError(SplittingError):
    def __init__(self, missing):
        self.missing = tuple(sorted(missing))
        super().__init__(f"X and Y do not cover the graph; missing {list(self.missing)}")


class TrivialSplittingError(SplittingError):
    def __init__(self, side):
        self.side = side
        super().__init__(f"splitting is trivial: {side} is the whole vertex set")


class SeparationError(SplittingError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(
            f"X∩Y does not separate the graph: edge {edge[0]}–{edge[1]} joins X∖Z to Y∖Z"
        )


class SizeCapExceeded(ArtinError, ValueError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(
            f"graph has {size} vertices, above the enumeration cap of {cap}; refusing"
        )


class EmbeddingError(ArtinError, ValueError):
    """A claimed supergraph does not contain the graph as an induced labelled subgraph."""

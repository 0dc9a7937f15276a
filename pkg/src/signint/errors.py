"""Exception types shared across the package."""


class SignintError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class ParseError(ValueError):
    """Malformed input file; message names the offending line."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class OracleBoundExceeded(SignintError):
    def __init__(self, size, bound, what="oracle"):
        super().__init__(f"{what} bound exceeded: size {size} > bound {bound}")
        self.size = size
        self.bound = bound


class SolverBoundExceeded(OracleBoundExceeded):
    def __init__(self, size, bound):
        super().__init__(size, bound, what="solver")


class ExactBoundExceeded(OracleBoundExceeded):
    def __init__(self, size, bound):
        super().__init__(size, bound, what="exact")


class NotBipartite(SignintError):
    def __init__(self, odd_cycle):
        super().__init__(f"graph is not bipartite; odd cycle {list(odd_cycle)}")
        self.odd_cycle = tuple(odd_cycle)


class EmptySide(SignintError):
    """No edge between the two sides; ``witness`` is the empty biclique."""

    def __init__(self):
        super().__init__("no edge between left and right")
        self.witness = (frozenset(), frozenset())
        self.size = 0


class NotInterval(SignintError):
    pass


class InvalidOrdering(SignintError):
    pass


class NotACycle(SignintError):
    pass


class GroundMismatch(SignintError):
    pass


class WrongCliqueCount(SignintError):
    pass


class NotIntervalInstance(SignintError):
    pass


class UncoloredVertex(SignintError):
    pass


class BadSigma(SignintError):
    pass

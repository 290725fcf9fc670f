"""Exception hierarchy shared by every module of the package."""


class SomborError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(SomborError, ValueError):
    """Invalid graph input: self-loop, out-of-range vertex, empty graph."""


class ParameterError(SomborError, ValueError):
    """A numeric parameter lies outside its allowed domain."""


class InfeasibleError(ParameterError):
    """No graph with the requested parameters exists."""


class RetryLimitError(SomborError, RuntimeError):
    """A randomized sampler exhausted its attempt budget."""


class SpecSyntaxError(SomborError, ValueError):
    """Malformed GraphSpec string."""


class ResourceError(SomborError, MemoryError):
    """An operation would exceed a configured size cap."""


class ConvergenceError(SomborError, ArithmeticError):
    """An iterative method failed to converge."""

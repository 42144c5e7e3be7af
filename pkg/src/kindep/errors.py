"""Exception hierarchy shared across the package."""


class KindepError(Exception):
    """Base class for all kindep errors."""


class GraphConstructionError(KindepError):
    """Invalid graph input."""


class SelfLoopError(GraphConstructionError):
    pass


class IndexOutOfRangeError(GraphConstructionError):
    pass


class DisconnectedGraphError(GraphConstructionError):
    pass


class InvalidParametersError(GraphConstructionError):
    pass


class SizeLimitError(KindepError):
    """A requested computation would exceed the configured size guard."""


class UnknownGraphError(KindepError):
    """Name not present in the built-in graph catalog."""


class ConvergenceError(KindepError):
    """Eigensolver failed to converge or produced inaccurate eigenpairs."""


class InvalidSpectrumError(KindepError):
    """Spectrum violates a structural requirement (e.g. m_0 != 1, d too small)."""


class DegenerateSpectrumError(KindepError):
    """Gram matrix of the spectral inner product is numerically singular."""


class InvalidDegreeError(KindepError):
    """Polynomial degree outside the admissible range for the operation."""


class LPNumericalError(KindepError):
    """Linear program did not reach a verified optimum."""


class BoundHypothesisError(KindepError):
    """Hypotheses of a bound are not satisfied by the supplied data."""


class NotRegularError(KindepError):
    """Operation requires a regular graph."""

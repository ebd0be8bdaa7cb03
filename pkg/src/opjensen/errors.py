"""Exception hierarchy shared by every module of the package."""


class OpJensenError(Exception):
    """Base class for all errors raised by :mod:`opjensen`."""


class NotHermitianError(OpJensenError, ValueError):
    pass


class DimensionError(OpJensenError, ValueError):
    pass


class DomainError(OpJensenError, ValueError):
    """An eigenvalue (or scalar argument) lies outside a function's domain."""

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class EigenSolverError(OpJensenError, RuntimeError):
    def __init__(self, message, dim, condition):
        super().__init__(f"{message} (dim={dim}, condition estimate={condition:.3g})")
        self.dim = dim
        self.condition = condition


class NormalizationError(OpJensenError, ValueError):
    """A map family does not satisfy ``sum_i Phi_i(I) = alpha I``."""


class HypothesisError(OpJensenError, ValueError):
    """The operators handed to a checker do not satisfy the theorem's hypotheses.

    Parameters
    ----------
    hypothesis : str
        Short name of the violated hypothesis, e.g. ``"A[0] <= m"``.
    margin : float, optional
        Signed size of the violation (negative means violated by that much).
    witness : numpy.ndarray, optional
        Unit vector at which the violation is attained.
    """

    def __init__(self, hypothesis, detail="", margin=None, witness=None):
        msg = f"hypothesis violated: {hypothesis}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.hypothesis = hypothesis
        self.margin = margin
        self.witness = witness


class ConvexityError(HypothesisError):
    """Grid certification of convexity/concavity failed on an interval."""


class GenerationError(OpJensenError, RuntimeError):
    def __init__(self, message, margin=None):
        if margin is not None:
            message = f"{message}; last violation margin {margin:.3g}"
        super().__init__(message)
        self.margin = margin

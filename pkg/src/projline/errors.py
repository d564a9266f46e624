"""Exception hierarchy.

Every library failure derives from :class:`ProjlineError`; the CLI maps
these to exit status 1, and :class:`MatrixFormatError` to exit status 2.
"""


class ProjlineError(Exception):
    """Base class for domain errors."""


class DimensionMismatch(ProjlineError, ValueError):
    pass


class EmptySubspace(ProjlineError, ValueError):
    pass


class NonFiniteInput(ProjlineError, ValueError):
    pass


class NotOrthogonal(ProjlineError):
    """The map handed in as U is not an isometry."""


class NotSkew(ProjlineError):
    pass


class DegenerateForm(ProjlineError):
    pass


class NotLagrangian(ProjlineError):
    """Subspace is not Lagrangian (not compatible with the polarisation)."""


class NotUnitary(ProjlineError):
    """The map recovered from a symplectic form is not unitary."""


class NotSymmetric(ProjlineError):
    pass


class InconsistentBlocks(ProjlineError):
    pass


class IllConditionedChart(ProjlineError):
    def __init__(self, message, angle=None, condition=None):
        super().__init__(message)
        self.angle = angle
        self.condition = condition


class SingularDenominator(ProjlineError):
    pass


class BadParameter(ProjlineError, ValueError):
    pass


class ZeroVector(ProjlineError, ValueError):
    pass


class ChartDegenerate(ProjlineError):
    pass


class NontrivialInfinity(ProjlineError):
    pass


class VerificationFailed(ProjlineError):
    """An internal consistency check on a computed result did not hold."""


class MatrixFormatError(Exception):
    """Malformed matrix text file. Not a domain error."""

"""Exception hierarchy shared by all deformalg modules."""


class DeformalgError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(DeformalgError, ZeroDivisionError):
    """Division by an exactly-zero scalar."""


class IllegalPromotion(DeformalgError):
    """Attempt to promote a scalar toward a more exact mode (e.g. float to exact)."""


class ClosureError(DeformalgError):
    """An exact-mode operation would leave the exact coefficient ring.

    Raised e.g. when base**alpha is irrational during affine composition.
    The caller decides whether to retry in float mode; nothing is converted
    silently.
    """


class NotPolynomial(DeformalgError):
    """Operation requires a pure polynomial but an exponential term is present."""


class ZeroPolynomial(DeformalgError):
    """Root extraction on the identically-zero polynomial is undefined."""


class NotDiagonal(DeformalgError):
    """Matrix argument must be diagonal."""


class DimensionMismatch(DeformalgError):
    """Matrix shapes are not conformable."""


class Inconsistent(DeformalgError):
    """Linear system has no solution."""


class NoSolutionInAnsatz(DeformalgError):
    """The Casimir consistency equation has no solution in the ansatz space."""


class DegenerateWeight(DeformalgError):
    """Normalized basis requested but a structure-function value vanishes."""


class UnsupportedCoefficient(DeformalgError):
    """Normal ordering would require composing an exponential coefficient
    through a non-affine weight map."""


class UnsupportedRootClass(DeformalgError):
    """Root search cannot handle this function class (non-fatal, reported)."""


class UnknownPreset(DeformalgError):
    """Preset key not in the catalog."""


class MissingParam(DeformalgError):
    """A required preset parameter was not supplied."""

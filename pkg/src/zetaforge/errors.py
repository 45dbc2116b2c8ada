"""Exception hierarchy shared by every module."""


class ZetaforgeError(Exception):
    """Base class for all library errors."""


class DomainError(ZetaforgeError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class PrecisionUnstable(ZetaforgeError):
    """Two rungs of the precision ladder disagree beyond tolerance."""


class MaxTermsExceeded(ZetaforgeError):
    """A series needed more terms than the context allows; never silently truncated."""


class NonConvergence(ZetaforgeError):
    """Quadrature level-doubling exhausted without meeting the stopping rule."""


class DivergentSeries(ZetaforgeError):
    """A summation engine certified its input series as divergent."""


class UnknownIdentity(ZetaforgeError, KeyError):
    """Identity id not present in the catalog."""

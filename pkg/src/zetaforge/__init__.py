"""zetaforge: high-precision zeta/harmonic/polylogarithm machinery plus a
machine-checkable catalog of the identities it implements."""

from . import combinatoric, emsum, mpcore, quad, registry, series, specfun
from .errors import (DivergentSeries, DomainError, MaxTermsExceeded,
                     NonConvergence, PrecisionUnstable, UnknownIdentity,
                     ZetaforgeError)
from .mpcore import PrecisionContext, constant, ctx_new, ladder_check

__version__ = "0.1.0"

__all__ = [
    "PrecisionContext", "ctx_new", "constant", "ladder_check",
    "combinatoric", "emsum", "mpcore", "quad", "registry", "series",
    "specfun",
    "ZetaforgeError", "DomainError", "PrecisionUnstable", "MaxTermsExceeded",
    "NonConvergence", "DivergentSeries", "UnknownIdentity",
]

"""Precision contexts, arbitrary-precision reals, the shared constant cache.

A ``Real`` is a gmpy2 ``mpfr`` bound to the precision of the gmpy2 context
active when it was produced.  Every public operation in the library follows
the same contract: evaluate internally at ``target_bits + guard_bits``,
round to ``target_bits`` (nearest-even) on return, and treat NaN/inf as
errors rather than values.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, replace
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr

from .errors import DomainError, PrecisionUnstable

Real = mpfr

_CONSTANT_NAMES = (
    "pi", "log2", "e", "gamma", "catalan",
    "zeta'(2)", "zeta'(-1)", "zeta'(-2)", "log_A",
    "li2_half", "li3_half", "li4_half",
)


@dataclass(frozen=True)
class PrecisionContext:
    """Requested output precision plus guard-bit and series-length policy."""

    target_bits: int
    guard_bits: int = 32
    max_terms: int = 10_000_000

    def __post_init__(self):
        if self.target_bits < 16:
            raise DomainError(f"target_bits must be >= 16, got {self.target_bits}")
        if self.guard_bits < 8:
            raise DomainError(f"guard_bits must be >= 8, got {self.guard_bits}")
        if self.max_terms < 1:
            raise DomainError("max_terms must be positive")

    @property
    def work_bits(self) -> int:
        return self.target_bits + self.guard_bits

    def doubled(self) -> "PrecisionContext":
        return replace(self, target_bits=2 * self.target_bits)

    def decimal_digits(self) -> int:
        """Significant digits carried by target_bits, minus a safety margin."""
        return max(1, int(self.target_bits * 0.30103) - 2)


def ctx_new(target_bits: int) -> PrecisionContext:
    """Fresh context with default guard bits and series cap."""
    return PrecisionContext(target_bits=int(target_bits))


def workprec(ctx: PrecisionContext, extra: int = 0):
    """gmpy2 context manager running at ctx.work_bits + extra."""
    return gmpy2.context(precision=ctx.work_bits + extra)


def to_mpfr(value) -> Real:
    """Convert int/Fraction/str/float/mpfr to mpfr at the active precision."""
    if isinstance(value, mpfr):
        return +value
    if isinstance(value, Fraction):
        return mpfr(value.numerator) / mpfr(value.denominator)
    return mpfr(value)


def finish(ctx: PrecisionContext, x) -> Real:
    """Round a work-precision value to target_bits; reject non-finite results."""
    r = mpfr(x, ctx.target_bits)
    if not gmpy2.is_finite(r):
        raise DomainError("operation produced a non-finite value")
    return r


def fmt_real(x: Real, digits: int) -> str:
    """Locale-independent decimal rendering with the given significant digits."""
    return f"{x:.{digits}g}"


def ladder_check(f, ctx: PrecisionContext) -> Real:
    """Evaluate ``f`` at P and 2P bits; return the 2P value rounded to P.

    ``f`` must be a pure callable taking a PrecisionContext.  Disagreement
    beyond 2**(-P+4) (relative to max(1, |value|)) raises PrecisionUnstable.
    """
    lo = f(ctx)
    hi = f(ctx.doubled())
    with workprec(ctx.doubled()):
        diff = abs(to_mpfr(lo) - to_mpfr(hi))
        scale = max(mpfr(1), abs(to_mpfr(hi)))
        bound = mpfr(2) ** (-(ctx.target_bits - 4)) * scale
        if diff > bound:
            raise PrecisionUnstable(
                f"ladder rungs disagree: |lo-hi|={diff:.3e} > {bound:.3e}"
            )
    return finish(ctx, hi)


class ConstantCache:
    """Memo of (constant name, working precision) -> mpfr.

    Fill-on-miss is idempotent and guarded by a lock, so concurrent readers
    are safe.  Values are computed at the precision of the gmpy2 context
    active at call time; entries at distinct precisions live side by side.
    """

    def __init__(self):
        self._memo: dict[tuple[str, int], Real] = {}
        self._lock = threading.Lock()

    def value(self, name: str) -> Real:
        prec = gmpy2.get_context().precision
        key = (name, prec)
        hit = self._memo.get(key)
        if hit is not None:
            return +hit
        val = _compute_constant(name)
        with self._lock:
            self._memo.setdefault(key, val)
        return +val

    def clear(self):
        with self._lock:
            self._memo.clear()


_cache = ConstantCache()


def _compute_constant(name: str) -> Real:
    # zeta-family constants route through the summation engines; gamma uses
    # MPFR's classical exponential-integral scheme so it stays independent of
    # every identity that consumes it; catalan comes from the Euler transform
    # of sum (-1)^n/(2n+1)^2 for the same reason.
    if name == "pi":
        return gmpy2.const_pi()
    if name == "log2":
        return gmpy2.const_log2()
    if name == "e":
        return gmpy2.exp(mpfr(1))
    if name == "gamma":
        return gmpy2.const_euler()
    if name == "catalan":
        from . import series
        return series._catalan_impl()
    if name.startswith("zeta(") and name.endswith(")"):
        k = int(name[5:-1])
        if k < 2:
            raise DomainError(f"cached zeta values need k >= 2, got {k}")
        from . import emsum
        return emsum.zeta_int_impl(k)
    if name == "zeta'(2)":
        from . import emsum
        return emsum.hurwitz_impl(mpfr(2), mpfr(1), deriv=1)
    if name == "zeta'(-1)":
        # cross-derivation identity: 1/12 (1 - gamma - log 2pi) + zeta'(2)/(2 pi^2)
        pi = constant_raw("pi")
        g = constant_raw("gamma")
        zp2 = constant_raw("zeta'(2)")
        return (1 - g - gmpy2.log(2 * pi)) / 12 + zp2 / (2 * pi * pi)
    if name == "zeta'(-2)":
        pi = constant_raw("pi")
        return -constant_raw("zeta(3)") / (4 * pi * pi)
    if name == "log_A":
        return mpfr(1) / 12 - constant_raw("zeta'(-1)")
    if name in ("li2_half", "li3_half", "li4_half"):
        from . import specfun
        s = {"li2_half": 2, "li3_half": 3, "li4_half": 4}[name]
        return specfun._polylog_impl(s, mpfr(1) / 2)
    raise DomainError(f"unknown constant {name!r}")


def constant_raw(name: str) -> Real:
    """Cached constant at the precision of the active gmpy2 context."""
    return _cache.value(name)


def constant(ctx: PrecisionContext, name: str) -> Real:
    """Public cached-constant lookup, rounded to ctx.target_bits."""
    if not _is_known_constant(name):
        raise DomainError(f"unknown constant {name!r}")
    with workprec(ctx):
        v = constant_raw(name)
    return finish(ctx, v)


def _is_known_constant(name: str) -> bool:
    if name in _CONSTANT_NAMES:
        return True
    if name.startswith("zeta(") and name.endswith(")"):
        try:
            return int(name[5:-1]) >= 2
        except ValueError:
            return False
    return False


def constant_names() -> tuple:
    """Names accepted by constant(); 'zeta(k)' stands for any integer k >= 2."""
    return _CONSTANT_NAMES + ("zeta(k)",)

"""Transcendental functions driving the identity catalog.

Gamma family through Stirling/Binet asymptotics with argument shifting,
zeta family through the Euler-Maclaurin kernel in emsum, polylogarithms
through the geometric series plus the log-argument expansion near 1,
Clausen functions through iterated integration of log(2 sin(x/2)), the
sine integral through power series / asymptotics, and Barnes log G through
the Gosper/Vardi functional equation.

Functions with a leading underscore are raw kernels: they run at the
precision of the active gmpy2 context and return unrounded mpfr values.
The public wrappers apply the context contract from mpcore.
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2
from gmpy2 import mpfr

from . import combinatoric, emsum
from .errors import DomainError, MaxTermsExceeded
from .mpcore import PrecisionContext, Real, constant_raw, finish, to_mpfr, workprec


def _eps(extra: int = 8) -> mpfr:
    return mpfr(2) ** (-(gmpy2.get_context().precision - extra))


def _pi() -> mpfr:
    return gmpy2.const_pi()


# ---------------------------------------------------------------- gamma family

def _log_gamma_impl(x: mpfr) -> mpfr:
    """log Gamma(x), x > 0: shift until Stirling's first omitted term is tiny."""
    prec = gmpy2.get_context().precision
    if x <= 0:
        raise DomainError("log_gamma needs x > 0")
    if x == 1 or x == 2:
        return mpfr(0)
    zmin = max(12, int(0.18 * prec))
    shift = mpfr(0)
    z = +x
    while z < zmin:
        shift += gmpy2.log(z)
        z += 1
    res = (z - mpfr(1) / 2) * gmpy2.log(z) - z + gmpy2.log(2 * _pi()) / 2
    zz = z * z
    zpow = 1 / z
    eps = _eps()
    n = 1
    while True:
        b = combinatoric.bernoulli(2 * n)
        t = mpfr(b.numerator) / mpfr(b.denominator) / ((2 * n) * (2 * n - 1)) * zpow
        res += t
        if abs(t) < eps:
            break
        zpow /= zz
        n += 1
        if n > 4 * prec:
            raise MaxTermsExceeded("Stirling series failed to converge")
    return res - shift


def _digamma_impl(x: mpfr) -> mpfr:
    """psi(x), x > 0, same shifted-asymptotic scheme as log_gamma."""
    prec = gmpy2.get_context().precision
    if x <= 0:
        raise DomainError("polygamma needs x > 0")
    zmin = max(12, int(0.18 * prec))
    shift = mpfr(0)
    z = +x
    while z < zmin:
        shift += 1 / z
        z += 1
    res = gmpy2.log(z) - 1 / (2 * z)
    zz = z * z
    zpow = 1 / zz
    eps = _eps()
    n = 1
    while True:
        b = combinatoric.bernoulli(2 * n)
        t = mpfr(b.numerator) / mpfr(b.denominator) / (2 * n) * zpow
        res -= t
        if abs(t) < eps:
            break
        zpow /= zz
        n += 1
        if n > 4 * prec:
            raise MaxTermsExceeded("digamma series failed to converge")
    return res - shift


def _polygamma_impl(k: int, x: mpfr) -> mpfr:
    if k == 0:
        return _digamma_impl(x)
    # psi^(k)(x) = (-1)^(k+1) k! zeta(k+1, x)
    fact = mpfr(1)
    for j in range(2, k + 1):
        fact *= j
    sign = 1 if k % 2 == 1 else -1
    return sign * fact * emsum.hurwitz_impl(mpfr(k + 1), x)


def _gamma_impl(x: mpfr) -> mpfr:
    return gmpy2.exp(_log_gamma_impl(x))


def _gamma_deriv_impl(j: int, x: mpfr) -> mpfr:
    """Gamma^(j)(x) by the Leibniz recurrence on Gamma' = Gamma * psi."""
    derivs = [_gamma_impl(x)]
    psis = [_polygamma_impl(m, x) for m in range(j)]
    for order in range(j):
        nxt = mpfr(0)
        for i in range(order + 1):
            nxt += combinatoric.binomial(order, i) * derivs[i] * psis[order - i]
        derivs.append(nxt)
    return derivs[j]


def log_gamma(ctx: PrecisionContext, x) -> Real:
    """log Gamma(x) for x > 0."""
    with workprec(ctx):
        r = _log_gamma_impl(to_mpfr(x))
    return finish(ctx, r)


def polygamma(ctx: PrecisionContext, k: int, x) -> Real:
    """psi^(k)(x) for x > 0; k = 0 is the digamma function."""
    if k < 0:
        raise DomainError("polygamma order must be >= 0")
    with workprec(ctx):
        r = _polygamma_impl(k, to_mpfr(x))
    return finish(ctx, r)


def gamma_deriv(ctx: PrecisionContext, j: int, x) -> Real:
    """Gamma^(j)(x) for x > 0, j <= 6."""
    if j < 0 or j > 6:
        raise DomainError("gamma_deriv supports 0 <= j <= 6")
    with workprec(ctx):
        r = _gamma_deriv_impl(j, to_mpfr(x))
    return finish(ctx, r)


# ----------------------------------------------------------------- zeta family

def _zeta_impl(s: mpfr) -> mpfr:
    if s == 1:
        raise DomainError("zeta has a pole at s = 1")
    if s > 1:
        if s == gmpy2.floor(s):
            return emsum.zeta_int_impl(int(s))
        return emsum.hurwitz_impl(s, mpfr(1))
    if s == gmpy2.floor(s):
        return emsum.zeta_neg_int(int(-s))
    if s > 0:
        # the reflection would bounce back into (0,1); the Euler-Maclaurin
        # continuation is used on the critical strip instead
        return emsum.hurwitz_impl(s, mpfr(1))
    # s < 0: reflect, zeta(s) = 2 (2pi)^(s-1) Gamma(1-s) sin(pi s/2) zeta(1-s)
    pi = _pi()
    g = gmpy2.exp(_log_gamma_impl(1 - s))
    return 2 * (2 * pi) ** (s - 1) * g * gmpy2.sin(pi * s / 2) * _zeta_impl(1 - s)


def zeta(ctx: PrecisionContext, s) -> Real:
    """Riemann zeta at real s != 1; trivial zeros are exact."""
    with workprec(ctx):
        r = _zeta_impl(to_mpfr(s))
    return finish(ctx, r)


def _zeta_alt_impl(s: mpfr) -> mpfr:
    if s == 1:
        return gmpy2.const_log2()
    return (1 - mpfr(2) ** (1 - s)) * _zeta_impl(s)


def zeta_alt(ctx: PrecisionContext, s) -> Real:
    """Alternating zeta sum (-1)^(n+1)/n^s, continued by (1-2^(1-s)) zeta(s)."""
    with workprec(ctx):
        r = _zeta_alt_impl(to_mpfr(s))
    return finish(ctx, r)


def _zeta_prime_impl(s: mpfr) -> mpfr:
    if s <= 1:
        raise DomainError("zeta_prime needs s > 1")
    return emsum.hurwitz_impl(s, mpfr(1), deriv=1)


def zeta_prime(ctx: PrecisionContext, s) -> Real:
    """zeta'(s) = -sum log n / n^s for s > 1."""
    with workprec(ctx):
        r = _zeta_prime_impl(to_mpfr(s))
    return finish(ctx, r)


def zeta_second(ctx: PrecisionContext, s) -> Real:
    """zeta''(s) for s > 1 (consumed by the log-log moment integrals)."""
    with workprec(ctx):
        ss = to_mpfr(s)
        if ss <= 1:
            raise DomainError("zeta_second needs s > 1")
        r = emsum.hurwitz_impl(ss, mpfr(1), deriv=2)
    return finish(ctx, r)


def _hurwitz_impl(s: mpfr, a: mpfr, a_frac: Fraction | None = None,
                  method: str = "auto") -> mpfr:
    if a <= 0:
        raise DomainError("hurwitz_zeta needs a > 0")
    if s == 1:
        raise DomainError("hurwitz_zeta has a pole at s = 1")
    if method == "auto" and s < 1 and s == gmpy2.floor(s):
        # zeta(1-m, a) = -B_m(a)/m exactly
        m = int(1 - s)
        if a_frac is not None:
            b = combinatoric.bernoulli_poly(m, a_frac)
            return -(mpfr(b.numerator) / mpfr(b.denominator)) / m
        return -_bernoulli_poly_mpfr(m, a) / m
    return emsum.hurwitz_impl(s, a)


def hurwitz_zeta(ctx: PrecisionContext, s, a, method: str = "auto") -> Real:
    """Hurwitz zeta(s, a), a > 0, s != 1.

    Nonpositive-integer s collapses to the exact Bernoulli polynomial value
    with method="auto"; method="continuation" forces the Euler-Maclaurin
    route for cross-checks.
    """
    with workprec(ctx):
        r = _hurwitz_impl(
            to_mpfr(s), to_mpfr(a), a_frac=_fraction_or_none(a), method=method
        )
    return finish(ctx, r)


_SDERIV_CLOSED = {}


def _sderiv_closed_forms():
    """(s, a) -> thunk for the rational-argument closed forms in the catalog."""
    if _SDERIV_CLOSED:
        return _SDERIV_CLOSED

    def at_half():
        return -gmpy2.const_log2() / 24 - constant_raw("zeta'(-1)") / 2

    def at_quarter():
        return constant_raw("catalan") / (4 * _pi()) - constant_raw("zeta'(-1)") / 8

    def at_three_quarters():
        return -constant_raw("catalan") / (4 * _pi()) - constant_raw("zeta'(-1)") / 8

    def m2_at_half():
        return 3 * constant_raw("zeta(3)") / (16 * _pi() ** 2)

    _SDERIV_CLOSED.update({
        (Fraction(-1), Fraction(1, 2)): at_half,
        (Fraction(-1), Fraction(1, 4)): at_quarter,
        (Fraction(-1), Fraction(3, 4)): at_three_quarters,
        (Fraction(-1), Fraction(1)): lambda: constant_raw("zeta'(-1)"),
        (Fraction(-2), Fraction(1, 2)): m2_at_half,
        (Fraction(-2), Fraction(1)): lambda: constant_raw("zeta'(-2)"),
    })
    return _SDERIV_CLOSED


def _hurwitz_sderiv_impl(s: mpfr, a: mpfr,
                         s_frac: Fraction | None = None,
                         a_frac: Fraction | None = None,
                         method: str = "auto") -> mpfr:
    if a <= 0:
        raise DomainError("hurwitz_zeta_sderiv needs a > 0")
    if s >= 1:
        raise DomainError("hurwitz_zeta_sderiv is restricted to s < 1")
    if method == "auto" and s_frac is not None and a_frac is not None:
        thunk = _sderiv_closed_forms().get((s_frac, a_frac))
        if thunk is not None:
            return thunk()
    return emsum.hurwitz_impl(s, a, deriv=1)


def hurwitz_zeta_sderiv(ctx: PrecisionContext, s, a, method: str = "auto") -> Real:
    """d/ds zeta(s, a) for s < 1, 0 < a.

    Known rational-argument closed forms short-circuit under method="auto";
    method="continuation" always runs the Euler-Maclaurin continuation so
    the closed forms themselves stay verifiable against it.
    """
    with workprec(ctx):
        r = _hurwitz_sderiv_impl(
            to_mpfr(s), to_mpfr(a),
            s_frac=_fraction_or_none(s), a_frac=_fraction_or_none(a),
            method=method,
        )
    return finish(ctx, r)


def _hurwitz_alt_impl(s: mpfr, u: mpfr, max_terms: int) -> mpfr:
    if u <= 0:
        raise DomainError("hurwitz_zeta_alt needs u > 0")
    return emsum.alternating_hasse(
        lambda k: (k + u) ** (-s), max_terms=max_terms
    )


def hurwitz_zeta_alt(ctx: PrecisionContext, s, u) -> Real:
    """Alternating Hurwitz zeta sum (-1)^n/(n+u)^s via the binomial transform."""
    with workprec(ctx):
        r = _hurwitz_alt_impl(to_mpfr(s), to_mpfr(u), ctx.max_terms)
    return finish(ctx, r)


def _dirichlet_beta_impl(s: mpfr, max_terms: int) -> mpfr:
    return emsum.alternating_hasse(
        lambda k: (2 * k + 1) ** (-s), max_terms=max_terms
    )


def dirichlet_beta(ctx: PrecisionContext, s) -> Real:
    """beta(s) = sum (-1)^n/(2n+1)^s, accelerated binomial transform."""
    with workprec(ctx):
        r = _dirichlet_beta_impl(to_mpfr(s), ctx.max_terms)
    return finish(ctx, r)


# ---------------------------------------------------------------- polylogarithm

def _zeta_coeff(k: int) -> mpfr:
    """zeta(k) for any integer k != 1 (cached for k >= 2, exact for k <= 0)."""
    if k >= 2:
        return constant_raw(f"zeta({k})")
    return emsum.zeta_neg_int(-k)


def _polylog_impl(s: int, x: mpfr, xc: mpfr | None = None) -> mpfr:
    """Li_s(x) for integer s >= 1, -1 <= x <= 1.

    ``xc`` optionally supplies 1-x computed without cancellation, which the
    quadrature paths rely on for abscissas double-exponentially close to 1.
    """
    if s < 1:
        raise DomainError("polylog needs integer s >= 1")
    prec = gmpy2.get_context().precision
    if xc is None:
        xc = 1 - x
    if x > 1 or x < -1:
        raise DomainError("polylog needs -1 <= x <= 1")
    if s == 1:
        if xc <= 0:
            raise DomainError("Li_1 diverges at x = 1")
        return -gmpy2.log(xc)
    if xc == 0:
        return _zeta_coeff(s)
    if x == -1:
        return -(1 - mpfr(2) ** (1 - s)) * _zeta_coeff(s)
    if x == 0:
        return mpfr(0)
    half = mpfr(1) / 2
    if x < -half:
        # Li_s(x) = 2^(1-s) Li_s(x^2) - Li_s(-x)
        return mpfr(2) ** (1 - s) * _polylog_impl(s, x * x) - _polylog_impl(s, -x)
    if abs(x) <= half:
        eps = _eps()
        term = +x
        total = mpfr(0)
        n = 1
        while True:
            t = term / mpfr(n) ** s
            total += t
            if abs(t) < eps * max(mpfr(1), abs(total)):
                return total
            term *= x
            n += 1
            if n > 8 * prec:
                raise MaxTermsExceeded("polylog direct series stalled")
    # 1/2 < x < 1: expand in z = log x; coefficients are zeta(s-k)
    z = gmpy2.log1p(-xc) if xc < mpfr("0.25") else gmpy2.log(x)
    h = combinatoric.harmonic(s - 1, 1)
    fact = 1
    for j in range(2, s):
        fact *= j
    total = z ** (s - 1) / fact * (
        mpfr(h.numerator) / h.denominator - gmpy2.log(-z)
    )
    eps = _eps()
    zk = mpfr(1)
    kfact = mpfr(1)
    k = 0
    small_run = 0
    while True:
        if k != s - 1:
            t = _zeta_coeff(s - k) * zk / kfact
            total += t
            if abs(t) < eps * max(mpfr(1), abs(total)):
                small_run += 1
                if small_run >= 3 and k > s + 2:
                    return total
            else:
                small_run = 0
        k += 1
        zk *= z
        kfact *= k
        if k > 8 * prec:
            raise MaxTermsExceeded("polylog log-expansion stalled")


def polylog(ctx: PrecisionContext, s: int, x, xc=None) -> Real:
    """Li_s(x) for integer s >= 1 on [-1, 1]; (s, x) = (1, 1) diverges."""
    with workprec(ctx):
        r = _polylog_impl(int(s), to_mpfr(x), None if xc is None else to_mpfr(xc))
    return finish(ctx, r)


# -------------------------------------------------------------------- clausen

def _clausen_impl(n: int, theta: mpfr) -> mpfr:
    """Cl_n(theta): sin series for even n, cos series for odd n.

    Evaluated from the power series of log(2 sin(x/2)) integrated n-1
    times; the representation keeps theta^p, theta^p log theta and series
    coefficient tables exact along the chain.  2 pi periodicity and the
    parity symmetry reduce theta into [0, pi] first.
    """
    if n < 2:
        raise DomainError("clausen needs n >= 2")
    pi = _pi()
    twopi = 2 * pi
    theta = theta - gmpy2.floor(theta / twopi) * twopi
    sign = mpfr(1)
    if theta > pi:
        theta = twopi - theta
        if n % 2 == 0:
            sign = mpfr(-1)
    if gmpy2.is_zero(theta):
        return mpfr(0) if n % 2 == 0 else +_zeta_coeff(n)

    prec = gmpy2.get_context().precision
    eps = _eps()
    # series for Cl_1: -log(theta) + sum_j c_j theta^(2j),  c_j = zeta(2j)/(j (2pi)^(2j))
    ratio = (theta / twopi) ** 2
    series: dict[int, mpfr] = {}
    j = 1
    rpow = +ratio
    while True:
        zj = _zeta_coeff(2 * j)
        series[2 * j] = zj / (j * twopi ** (2 * j))
        if zj / j * rpow < eps:
            break
        rpow *= ratio
        j += 1
        if j > 8 * prec:
            raise MaxTermsExceeded("clausen series stalled")
    logterms = {0: mpfr(-1)}
    polyterms: dict[int, mpfr] = {}
    m = 1
    while m < n:
        newlog: dict[int, mpfr] = {}
        newpoly: dict[int, mpfr] = {}
        for p, acoef in logterms.items():
            newlog[p + 1] = newlog.get(p + 1, mpfr(0)) + acoef / (p + 1)
            newpoly[p + 1] = newpoly.get(p + 1, mpfr(0)) - acoef / mpfr((p + 1) ** 2)
        for q, bcoef in polyterms.items():
            newpoly[q + 1] = newpoly.get(q + 1, mpfr(0)) + bcoef / (q + 1)
        newser = {e + 1: c / (e + 1) for e, c in series.items()}
        if (m + 1) % 2 == 1:
            # odd order: Cl_{m+1}(theta) = zeta(m+1) - int_0^theta Cl_m
            newlog = {p: -a for p, a in newlog.items()}
            newpoly = {q: -b for q, b in newpoly.items()}
            newpoly[0] = newpoly.get(0, mpfr(0)) + _zeta_coeff(m + 1)
            newser = {e: -c for e, c in newser.items()}
        logterms, polyterms, series = newlog, newpoly, newser
        m += 1
    lt = gmpy2.log(theta)
    total = mpfr(0)
    for p, a in logterms.items():
        total += a * theta**p * lt
    for q, b in polyterms.items():
        total += b * theta**q
    for e, c in series.items():
        total += c * theta**e
    return sign * total


def clausen(ctx: PrecisionContext, n: int, theta) -> Real:
    """Clausen function Cl_n(theta), n >= 2, any real theta."""
    with workprec(ctx):
        r = _clausen_impl(int(n), to_mpfr(theta))
    return finish(ctx, r)


# --------------------------------------------------------------- sine integral

def _si_series(x: mpfr) -> mpfr:
    """Power-series Si with a cancellation-sized precision bump."""
    prec = gmpy2.get_context().precision
    bump = int(float(x) * 1.45) + 32
    with gmpy2.context(precision=prec + bump):
        x = +x
        eps = mpfr(2) ** (-(prec + 16))
        term = +x  # x^(2k+1)/(2k+1)!
        total = mpfr(0)
        k = 0
        while True:
            t = term / (2 * k + 1)
            total += t
            if abs(term) < eps:
                break
            term *= -x * x / ((2 * k + 2) * (2 * k + 3))
            k += 1
            if k > 64 * prec + 8 * int(float(x)):
                raise MaxTermsExceeded("Si power series stalled")
    return +total


def _si_asymptotic(x: mpfr) -> mpfr:
    """Si(x) = pi/2 - cos x * f(x) - sin x * g(x), divergent tails truncated
    at the smallest term; only used where that term is below working eps."""
    eps = _eps()
    f = mpfr(0)
    g = mpfr(0)
    tf = 1 / x  # (2j)!/x^(2j+1)
    tg = 1 / (x * x)
    j = 0
    while True:
        sgn = -1 if j % 2 else 1
        f += sgn * tf
        g += sgn * tg
        nxt_tf = tf * (2 * j + 1) * (2 * j + 2) / (x * x)
        if nxt_tf < eps:
            break
        if nxt_tf > tf:
            raise DomainError("Si asymptotic cannot reach the working precision here")
        tf = nxt_tf
        tg = tg * (2 * j + 2) * (2 * j + 3) / (x * x)
        j += 1
    return _pi() / 2 - gmpy2.cos(x) * f - gmpy2.sin(x) * g


def _si_impl(x: mpfr) -> mpfr:
    if x < 0:
        raise DomainError("sin_integral needs x >= 0")
    if gmpy2.is_zero(x):
        return mpfr(0)
    prec = gmpy2.get_context().precision
    # the asymptotic route only reaches eps once exp(-x) ~ 2^-prec
    switch = max(mpfr(20), mpfr(prec) * mpfr("0.8"))
    if x <= switch:
        return _si_series(x)
    return _si_asymptotic(x)


def sin_integral(ctx: PrecisionContext, x) -> Real:
    """Si(x) = int_0^x sin t / t dt for x >= 0."""
    with workprec(ctx):
        r = _si_impl(to_mpfr(x))
    return finish(ctx, r)


# -------------------------------------------------------------------- Barnes G

def _barnes_log_g_impl(x: mpfr) -> mpfr:
    # Gosper/Vardi: log G(x+1) - x log Gamma(x) = zeta'(-1) - zeta'(-1, x),
    # combined with G(x+1) = Gamma(x) G(x)
    if x <= 0 or x > 2:
        raise DomainError("barnes_log_g is restricted to 0 < x <= 2")
    if x == 1 or x == 2:
        return mpfr(0)
    return (
        (x - 1) * _log_gamma_impl(x)
        + constant_raw("zeta'(-1)")
        - emsum.hurwitz_impl(mpfr(-1), x, deriv=1)
    )


def barnes_log_g(ctx: PrecisionContext, x) -> Real:
    """log of the Barnes G function on (0, 2]."""
    with workprec(ctx):
        r = _barnes_log_g_impl(to_mpfr(x))
    return finish(ctx, r)


# ------------------------------------------------------------------- utilities

def _fraction_or_none(x) -> Fraction | None:
    """Exact rational meaning of an argument, when it has one.

    Ints and Fractions pass through; mpfr/float/decimal-string arguments
    count only when they are exactly a small dyadic rational, so that 0.25
    means 1/4 but no spurious exactness is invented for 1/3-like values.
    """
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    try:
        q = gmpy2.mpq(to_mpfr(x))
    except (ValueError, TypeError):
        return None
    f = Fraction(int(q.numerator), int(q.denominator))
    if f.denominator <= 64 and abs(f.numerator) <= 4096:
        return f
    return None


def _bernoulli_poly_mpfr(m: int, a: mpfr) -> mpfr:
    total = mpfr(0)
    for k in range(m + 1):
        b = combinatoric.bernoulli(k)
        total += (
            combinatoric.binomial(m, k)
            * mpfr(b.numerator)
            / mpfr(b.denominator)
            * a ** (m - k)
        )
    return total

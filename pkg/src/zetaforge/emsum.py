"""Euler-Maclaurin summation kernels for the zeta family.

The single engine here evaluates

    F(s, a, m) = "sum_{n>=0} log^m(n+a) / (n+a)^s"

together with its meaning under analytic continuation for s < 1 (m = 0 is
the Hurwitz zeta itself, m = 1 its first s-derivative up to sign, m = 2 the
second).  The formula used is the classical one: a direct sum over the
first N abscissas, the integral term, the half-term, and K Bernoulli
corrections; truncation error is governed by the first omitted correction.
It is valid for every real s except the pole at 1, which is exactly what
the negative-argument zeta derivatives in the catalog need.

Everything runs at the precision of the active gmpy2 context and returns
raw mpfr values; the public wrappers in specfun round to target precision.
"""

from __future__ import annotations

import threading

import gmpy2
from gmpy2 import mpfr

from . import combinatoric
from .errors import DomainError, MaxTermsExceeded

# N = K = _DEPTH_FACTOR * working-bits keeps the first omitted Bernoulli
# correction below roughly (1/pi)^(2K), comfortably under 2^-work.
_DEPTH_FACTOR = 0.4


def _depth(prec: int) -> int:
    return max(18, int(_DEPTH_FACTOR * prec))


def _bern(n: int) -> mpfr:
    b = combinatoric.bernoulli(n)
    return mpfr(b.numerator) / mpfr(b.denominator)


_poch_lock = threading.Lock()
_poch_cache: dict = {}


def _poch_with_derivs(s: mpfr, m: int, order: int):
    """prod_{j<m}(s+j) and its first/second derivatives in s.

    Derivatives are assembled from sums of partial products so that zero
    factors (s at a negative integer) stay exact instead of producing 0/0.
    These depend only on s, not on the Hurwitz shift, so they are cached
    per (s, m, order, precision); the Hurwitz kernel hits this for every
    abscissa of a quadrature rule.
    """
    prec = gmpy2.get_context().precision
    key = (gmpy2.to_binary(s), m, order, prec)
    with _poch_lock:
        hit = _poch_cache.get(key)
    if hit is not None:
        return hit
    fac = [s + j for j in range(m)]
    # prefix[i] = prod_{j<i}, suffix[i] = prod_{j>=i}
    prefix = [mpfr(1)]
    for f in fac:
        prefix.append(prefix[-1] * f)
    suffix = [mpfr(1)] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] * fac[i]
    P = prefix[m]
    P1 = None
    P2 = None
    if order >= 1:
        P1 = mpfr(0)
        for i in range(m):
            P1 += prefix[i] * suffix[i + 1]
    if order >= 2:
        # sum over i<l of 2 * prod_{j!=i,l}; O(m^2) but cached
        P2 = mpfr(0)
        for i in range(m):
            left = prefix[i]
            inner = mpfr(1)
            for l in range(i + 1, m):
                P2 += left * inner * suffix[l + 1]
                inner *= fac[l]
        P2 *= 2
    result = (P, P1, P2)
    with _poch_lock:
        _poch_cache.setdefault(key, result)
    return result


def hurwitz_impl(s, a, deriv: int = 0, terms: int | None = None) -> mpfr:
    """zeta(s,a), zeta'(s,a) or zeta''(s,a) by Euler-Maclaurin, s != 1, a > 0.

    ``deriv`` counts s-derivatives.  The returned value is the analytic
    continuation wherever s < 1.
    """
    if deriv not in (0, 1, 2):
        raise DomainError("deriv must be 0, 1 or 2")
    prec = gmpy2.get_context().precision
    s = mpfr(s)
    a = mpfr(a)
    if a <= 0:
        raise DomainError("Hurwitz zeta needs a > 0")
    if s == 1:
        raise DomainError("zeta(s,a) has a pole at s = 1")
    N = K = _depth(prec) if terms is None else terms
    if s < 0:
        # the continuation cancels the growing direct part against the
        # integral term, losing about (1+|s|) log2(N+a) bits
        import math

        bump = int((2 - float(s)) * math.log2(N + float(a))) + 8
        with gmpy2.context(precision=prec + bump):
            val = _hurwitz_core(+s, +a, deriv, N, K)
        return +val
    return _hurwitz_core(s, a, deriv, N, K)


def _hurwitz_core(s: mpfr, a: mpfr, deriv: int, N: int, K: int) -> mpfr:
    tot = mpfr(0)
    for n in range(N):
        x = a + n
        t = x ** (-s)
        if deriv == 0:
            tot += t
        else:
            L = gmpy2.log(x)
            tot += (-L * t) if deriv == 1 else (L * L * t)

    A = a + N
    LA = gmpy2.log(A)
    s1 = s - 1
    Apow1 = A ** (1 - s)
    if deriv == 0:
        tot += Apow1 / s1
    elif deriv == 1:
        tot += -LA * Apow1 / s1 - Apow1 / (s1 * s1)
    else:
        tot += (LA * LA / s1 + 2 * LA / (s1 * s1) + 2 / (s1 ** 3)) * Apow1

    Apow = A ** (-s)
    if deriv == 0:
        tot += Apow / 2
    elif deriv == 1:
        tot += -LA * Apow / 2
    else:
        tot += LA * LA * Apow / 2

    # Bernoulli corrections: B_2k/(2k)! * (s)_{2k-1} * A^(1-s-2k)
    cfac = mpfr(1)  # running 1/(2k)!
    Apow = A ** (-s - 1)
    A2 = A * A
    for k in range(1, K + 1):
        cfac /= (2 * k - 1) * (2 * k)
        c = _bern(2 * k) * cfac
        P, P1, P2 = _poch_with_derivs(s, 2 * k - 1, deriv)
        if deriv == 0:
            tot += c * P * Apow
        elif deriv == 1:
            tot += c * (P1 - P * LA) * Apow
        else:
            tot += c * (P2 - 2 * P1 * LA + P * LA * LA) * Apow
        Apow /= A2
    return tot


def zeta_int_impl(k: int) -> mpfr:
    """zeta(k) for integer k >= 2; even k use the exact Bernoulli formula."""
    if k < 2:
        raise DomainError("zeta_int_impl needs k >= 2")
    if k % 2 == 0:
        m = k // 2
        b = combinatoric.bernoulli(k)
        bm = mpfr(b.numerator) / mpfr(b.denominator)
        pi = gmpy2.const_pi()
        sign = -1 if m % 2 == 0 else 1
        fact = mpfr(1)
        for j in range(2, k + 1):
            fact *= j
        return sign * (2 * pi) ** k * bm / (2 * fact)
    return hurwitz_impl(mpfr(k), mpfr(1))


def zeta_neg_int(n: int) -> mpfr:
    """zeta(-n) for integer n >= 0, exact through Bernoulli numbers."""
    if n == 0:
        return mpfr(-1) / 2
    if n % 2 == 0:
        return mpfr(0)
    b = combinatoric.bernoulli(n + 1)
    return -mpfr(b.numerator) / mpfr(b.denominator) / (n + 1)


def log_weighted_tail(s, m: int, N: int) -> mpfr:
    """sum_{n>N} log^m(n)/n^s for s > 1, m in 0..2, via the same kernel."""
    sign = -1 if m == 1 else 1
    return sign * hurwitz_impl(mpfr(s), mpfr(N + 1), deriv=m)


def alternating_hasse(term, max_terms: int = 10_000_000) -> mpfr:
    """sum_{k>=0} (-1)^k term(k) through the binomial (Hasse) transform.

    Evaluates sum_n 2^(-n-1) sum_{k<=n} C(n,k) (-1)^k term(k): globally
    convergent with geometric 2^-n outer decay for the smooth positive
    decreasing terms used here.  The inner alternating sums cancel by up to
    n bits, so the whole computation runs with a matching precision bump.
    """
    prec = gmpy2.get_context().precision
    n_max = min(max_terms, 2 * prec + 128)
    with gmpy2.context(precision=prec + n_max + 32):
        eps = mpfr(2) ** (-(prec + 16))
        values = [mpfr(term(0))]
        row = [1]
        total = values[0] / 2
        weight = mpfr(1) / 2
        small_run = 0
        n = 0
        while True:
            n += 1
            if n > n_max:
                raise MaxTermsExceeded(
                    "binomial transform needed more than "
                    f"{n_max} rows; series may converge too slowly"
                )
            values.append(mpfr(term(n)))
            # next Pascal row
            row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
            inner = mpfr(0)
            for k in range(n + 1):
                v = row[k] * values[k]
                inner += -v if (k & 1) else v
            weight /= 2
            contrib = weight * inner
            total += contrib
            if abs(contrib) < eps * max(mpfr(1), abs(total)):
                small_run += 1
                if small_run >= 3:
                    break
            else:
                small_run = 0
    return +total

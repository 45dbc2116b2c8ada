"""Summation engines for the infinite Euler-sum and generating-function families.

Design notes on convergence:

* plain Euler sums  sum H_n^(p)/n^q  are summed directly to a modest N and
  closed with analytic tails: for p >= 2 through the asymptotic expansion of
  the Hurwitz tail zeta(p, n), for p = 1 through the Stirling-type expansion
  of H_n, term by term against zeta(q+j, N+1) values from the
  Euler-Maclaurin kernel.  Everything reaches full working precision in
  O(work_bits) operations.
* geometric-weight families (x = 1/2 and alternating) are summed literally;
  their tails are bounded by the geometric factor.
* the alternating binomial (Hasse/Euler) transform engine lives in emsum and
  carries a cancellation-sized precision bump; nonalternating 2^-n inputs
  are evaluated through the exact per-k weight collapse instead, because
  their literal outer sums only converge polynomially.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import gmpy2
from gmpy2 import mpfr

from . import combinatoric, emsum, quad, specfun
from .errors import DivergentSeries, DomainError, MaxTermsExceeded
from .mpcore import PrecisionContext, Real, constant_raw, finish, to_mpfr, workprec

# direct-summation depth before analytic tails take over
_DIRECT_N_FACTOR = 0.5

_SERIES_KINDS = ("positive-decreasing", "alternating", "geometric-weighted")


@dataclass(frozen=True)
class SeriesSpec:
    """A summable series: term(n), its kind, and a remainder majorant.

    ``tail_bound(n, partial)`` must bound the true remainder after n terms
    for the declared kind; known series in the test suite validate that
    contract.
    """

    term: Callable
    kind: str = "positive-decreasing"
    tail_bound: Callable = None


def _eps(extra: int = 10) -> mpfr:
    return mpfr(2) ** (-(gmpy2.get_context().precision - extra))


def _fr(v: Fraction) -> mpfr:
    return mpfr(v.numerator) / mpfr(v.denominator)


# ------------------------------------------------------------- generic engines

def sum_series(ctx: PrecisionContext, term=None, tail_bound=None,
               kind: str = "positive-decreasing",
               spec: SeriesSpec | None = None) -> Real:
    """Partial sum with a bound-certified stop.

    Accepts either a SeriesSpec or the (term, tail_bound, kind) triple:
    ``term(n)`` gives the n-th term (n >= 1) at working precision and
    ``tail_bound(n, partial)`` must majorize the remainder after n terms.
    Stops once the bound falls below 2^-target_bits.
    """
    if spec is None and isinstance(term, SeriesSpec):
        spec = term
    if spec is not None:
        term, tail_bound, kind = spec.term, spec.tail_bound, spec.kind
    if term is None or tail_bound is None:
        raise DomainError("sum_series needs a term and a tail bound")
    if kind not in _SERIES_KINDS:
        raise DomainError(f"unknown series kind {kind!r}")
    with workprec(ctx):
        eps = mpfr(2) ** (-(ctx.target_bits + 4))
        total = mpfr(0)
        n = 0
        while True:
            n += 1
            if n > ctx.max_terms:
                raise MaxTermsExceeded(
                    f"series exceeded max_terms={ctx.max_terms} before its "
                    "tail bound met the target"
                )
            total += to_mpfr(term(n))
            b = abs(to_mpfr(tail_bound(n, total)))
            if b < eps * max(mpfr(1), abs(total)):
                break
    return finish(ctx, total)


def euler_transform(ctx: PrecisionContext, alt_terms) -> Real:
    """Euler transformation of sum_{n>=0} (-1)^n a_n for positive decreasing a_n.

    ``alt_terms(n)`` returns a_n > 0.  Monotonicity is spot-checked; the
    engine is the binomial transform, which converges geometrically.
    """
    with workprec(ctx):
        probe = [to_mpfr(alt_terms(k)) for k in range(0, 40, 4)]
        if any(b > a * mpfr("1.0000001") for a, b in zip(probe, probe[1:])):
            raise DivergentSeries("alternating terms are not decreasing")
        r = emsum.alternating_hasse(lambda k: to_mpfr(alt_terms(k)),
                                    max_terms=ctx.max_terms)
    return finish(ctx, r)


def binomial_transform_sum(ctx: PrecisionContext, f, scale: str = "2^-n-1",
                           alternating: bool | None = None, start: int = 0,
                           tail=None) -> Real:
    """The Hasse-type engine  sum_n scale_n sum_{k} C(n,k) f(k).

    With alternating f (detected or forced via ``alternating``) the outer
    series converges geometrically and is summed literally.  For positive f
    the engine collapses the weights exactly:  sum_{n>=k} 2^(-n-1) C(n,k)=1
    (and 2 for the 2^-n scale), so the value is sum_k f(k) * weight, after a
    divergence certificate on f.  Polynomially decaying positive inputs need
    ``tail``: a callable K -> sum_{k>K} f(k) closing the collapsed series
    analytically (e.g. a Hurwitz-zeta tail).
    """
    if scale not in ("2^-n-1", "2^-n"):
        raise DomainError("scale must be '2^-n-1' or '2^-n'")
    with workprec(ctx):
        if alternating is None:
            probe0 = to_mpfr(f(max(start, 1)))
            probe1 = to_mpfr(f(max(start, 1) + 1))
            alternating = probe0 * probe1 < 0
        if alternating:
            if start != 0:
                raise DomainError("alternating transforms start at k = 0")
            r = emsum.alternating_hasse(
                lambda k: to_mpfr(f(k)) * (-1) ** k, max_terms=ctx.max_terms
            )
            weight = mpfr(1) if scale == "2^-n-1" else mpfr(2)
            return finish(ctx, r * weight)
        # positive route: certify convergence of sum f(k) first
        _certify_summable(f, start)
        weight = mpfr(1) if scale == "2^-n-1" else mpfr(2)
        eps = _eps()
        total = mpfr(0)
        if tail is not None:
            K = max(48, int(_DIRECT_N_FACTOR * gmpy2.get_context().precision))
            for k in range(start, K + 1):
                total += to_mpfr(f(k))
            total += to_mpfr(tail(K))
            return finish(ctx, weight * total)
        small = 0
        k = start
        while True:
            t = to_mpfr(f(k))
            total += t
            if abs(t) < eps * max(mpfr(1), abs(total)):
                small += 1
                if small >= 4:
                    break
            else:
                small = 0
            k += 1
            if k - start > ctx.max_terms:
                raise MaxTermsExceeded(
                    "collapsed binomial transform stalled; supply `tail` "
                    "for polynomially decaying inputs"
                )
        return finish(ctx, weight * total)


def _certify_summable(f, start: int):
    """Reject f with sum f(k) divergent: estimated decay exponent <= 1."""
    k0 = max(start, 4)
    pairs = []
    for k in (k0, 2 * k0, 4 * k0, 8 * k0):
        a, b = abs(to_mpfr(f(k))), abs(to_mpfr(f(2 * k)))
        if b == 0:
            return
        pairs.append(float(gmpy2.log(a / b) / gmpy2.log(mpfr(2))))
    est = sum(pairs) / len(pairs)
    if est <= 1.02:
        raise DivergentSeries(
            f"inner sums grow too slowly (decay exponent ~{est:.3f} <= 1); "
            "the transformed series diverges"
        )


# ------------------------------------------------------------- Euler-sum tails

def _zeta_shift(s: int, N: int) -> mpfr:
    """zeta(s, N+1) = zeta(s) - H_N^(s) for integer s >= 2, exactly shifted."""
    h = combinatoric.harmonic(N, s)
    return constant_raw(f"zeta({s})") - _fr(h)


def _hurwitz_tail_coeffs(p: int, kmax: int):
    """Asymptotic zeta(p,n) ~ sum_j c_j n^(-e_j): yields (coeff, exponent)."""
    out = [(mpfr(1) / (p - 1), p - 1), (mpfr(1) / 2, p)]
    cfac = mpfr(1)
    for k in range(1, kmax + 1):
        cfac /= (2 * k - 1) * (2 * k)
        b = combinatoric.bernoulli(2 * k)
        c = _fr(b) * cfac
        poch = mpfr(1)
        for j in range(2 * k - 1):
            poch *= p + j
        out.append((c * poch, p + 2 * k - 1))
    return out


def euler_sum(ctx: PrecisionContext, p: int, q) -> Real:
    """sum_{n>=1} H_n^(p)/n^q for integer p >= 1, integer q >= 2;
    direct terms plus Euler-Maclaurin tails."""
    if p < 1:
        raise DomainError("euler_sum needs p >= 1")
    q = int(q)
    if q < 2:
        raise DomainError("euler_sum needs q >= 2 (divergent otherwise)")
    with workprec(ctx):
        r = _euler_sum_impl(p, q)
    return finish(ctx, r)


def _euler_sum_impl(p: int, q: int) -> mpfr:
    prec = gmpy2.get_context().precision
    N = max(24, int(_DIRECT_N_FACTOR * prec))
    total = mpfr(0)
    hn = Fraction(0)
    for n in range(1, N + 1):
        hn += Fraction(1, n**p)
        total += _fr(hn) / mpfr(n) ** q
    if p == 1:
        total += _tail_h1(q, N)
    else:
        # H_n^(p) = zeta(p) - zeta(p, n+1); zeta(p,n+1) = zeta(p,n) - n^-p
        total += constant_raw(f"zeta({p})") * _zeta_shift(q, N)
        total += _zeta_shift(p + q, N)
        kmax = max(10, int(0.35 * prec))
        for c, e in _hurwitz_tail_coeffs(p, kmax):
            total -= c * emsum.hurwitz_impl(mpfr(e + q), mpfr(N + 1))
    return total


def _tail_h1(q: int, N: int) -> mpfr:
    """sum_{n>N} H_n/n^q via H_n = log n + gamma + 1/(2n) - sum B_2k/(2k n^2k)."""
    prec = gmpy2.get_context().precision
    g = constant_raw("gamma")
    # log n part: sum_{n>N} log n / n^q
    total = emsum.log_weighted_tail(q, 1, N)
    total += g * _zeta_shift(q, N)
    total += emsum.hurwitz_impl(mpfr(q + 1), mpfr(N + 1)) / 2
    kmax = max(10, int(0.35 * prec))
    for k in range(1, kmax + 1):
        b = combinatoric.bernoulli(2 * k)
        total -= _fr(b) / (2 * k) * emsum.hurwitz_impl(mpfr(q + 2 * k), mpfr(N + 1))
    return total


def euler_sum_squared(ctx: PrecisionContext, q: int) -> Real:
    """sum_{n>=1} (H_n)^2 / n^q, q >= 2."""
    if q < 2:
        raise DomainError("euler_sum_squared needs q >= 2")
    with workprec(ctx):
        r = _euler_sum_sq_impl(q)
    return finish(ctx, r)


def _euler_sum_sq_impl(q: int) -> mpfr:
    prec = gmpy2.get_context().precision
    N = max(24, int(_DIRECT_N_FACTOR * prec))
    total = mpfr(0)
    hn = Fraction(0)
    for n in range(1, N + 1):
        hn += Fraction(1, n)
        v = _fr(hn)
        total += v * v / mpfr(n) ** q
    # (H_n)^2 = (log n + gamma + 1/(2n) - sum_k B_2k/(2k) n^-2k)^2, expanded
    # into log^m(n) n^-j monomials summed by the EM kernel
    g = constant_raw("gamma")
    kmax = max(8, int(0.18 * prec))
    poly = {0: mpfr(g)}  # exponent -> coefficient of n^-exponent (log-free part)
    poly[1] = mpfr(1) / 2
    for k in range(1, kmax + 1):
        poly[2 * k] = -_fr(combinatoric.bernoulli(2 * k)) / (2 * k)
    # (log n + P(1/n))^2 = log^2 n + 2 log n P + P^2
    total += emsum.hurwitz_impl(mpfr(q), mpfr(N + 1), deriv=2)
    cutoff = 2 * kmax + 1
    for e, c in poly.items():
        if q + e > q + cutoff:
            continue
        total += 2 * c * (-emsum.hurwitz_impl(mpfr(q + e), mpfr(N + 1), deriv=1))
    sq: dict[int, mpfr] = {}
    for e1, c1 in poly.items():
        for e2, c2 in poly.items():
            e = e1 + e2
            if e > cutoff:
                continue
            sq[e] = sq.get(e, mpfr(0)) + c1 * c2
    for e, c in sq.items():
        total += c * emsum.hurwitz_impl(mpfr(q + e), mpfr(N + 1))
    return total


def euler_sum_symmetric_check(ctx: PrecisionContext, p: int, q: int):
    """((sum H^(p)/n^q + sum H^(q)/n^p), (zeta(p)zeta(q) + zeta(p+q)))."""
    if p < 2 or q < 2:
        raise DomainError("symmetric relation needs p, q >= 2")
    with workprec(ctx):
        lhs = _euler_sum_impl(p, q) + _euler_sum_impl(q, p)
        rhs = (
            constant_raw(f"zeta({p})") * constant_raw(f"zeta({q})")
            + constant_raw(f"zeta({p + q})")
        )
    return finish(ctx, lhs), finish(ctx, rhs)


def alternating_euler_sum_13(ctx: PrecisionContext) -> Real:
    """sum (-1)^n H_n / n^3 by the alternating Hasse engine."""
    with workprec(ctx):
        table = {}

        def f(k):
            if k == 0:
                return mpfr(0)
            if k not in table:
                table[k] = _fr(combinatoric.harmonic(k, 1)) / mpfr(k) ** 3
            return table[k]

        r = emsum.alternating_hasse(f, max_terms=ctx.max_terms)
    return finish(ctx, r)


# ----------------------------------------------------- weighted Euler families

_W_FAMILIES = ("W1", "W2", "W3", "W4", "W5", "W6", "W7", "W8", "W9", "W10")


def weighted_euler_sum(ctx: PrecisionContext, family: str) -> Real:
    """Engine value of the weighted/binomial families W1..W10.

    W1..W3, W9, W10 are literal geometric-weight sums.  W4..W7 use the exact
    weight collapse of the 2^-n(-1) binomial transform onto plain Euler
    sums.  W8 follows its double-sum decomposition into two log-moment
    quadratures plus Euler-sum engines.
    """
    if family not in _W_FAMILIES:
        raise DomainError(f"unknown weighted family {family!r}")
    with workprec(ctx):
        if family == "W1":
            r = _geometric_h_sum(2, Fraction(1, 2), 1)
        elif family == "W2":
            r = _geometric_h_sum(3, Fraction(1, 2), 1)
        elif family == "W3":
            r = _geometric_h_sum(3, Fraction(-1, 2), 1)
        elif family == "W4":
            r = 2 * _euler_sum_impl(3, 3)
        elif family == "W5":
            r = _euler_sum_impl(2, 2)
        elif family == "W6":
            r = _euler_sum_impl(2, 3)
        elif family == "W7":
            r = _euler_sum_impl(2, 4)
        elif family == "W8":
            r = _w8_impl(ctx)
        elif family == "W9":
            r = _w9_impl()
        else:
            r = _w10_impl()
    return finish(ctx, r)


def _geometric_h_sum(p: int, x: Fraction, q: int) -> mpfr:
    """sum H_n^(p) x^n / n^q for |x| < 1, literal with geometric tail."""
    xm = _fr(x)
    eps = _eps()
    zp = constant_raw(f"zeta({p})") if p >= 2 else None
    total = mpfr(0)
    hn = Fraction(0)
    xn = mpfr(1)
    n = 0
    while True:
        n += 1
        hn += Fraction(1, n**p)
        xn *= xm
        t = _fr(hn) * xn / mpfr(n) ** q
        total += t
        # tail bound: |x|^n zeta(p)/(1-|x|)
        if zp is not None:
            bound = abs(xn) * zp / (1 - abs(xm))
        else:
            bound = abs(xn) * (_fr(hn) + n) / (1 - abs(xm))
        if bound < eps * max(mpfr(1), abs(total)):
            return total
        if n > 64 * gmpy2.get_context().precision:
            raise MaxTermsExceeded("geometric harmonic sum stalled")


def _w8_impl(ctx: PrecisionContext) -> mpfr:
    # (1/3) sum_n [u_n - zeta(2) v_n]/(n+1) = (1/3) I[log^2 Li3] + I[log Li4],
    # and the zeta(2) v_n piece collapses to zeta(2)/6 * sum [(H)^2+H^(2)]/m^2
    i5, _e5, _l5 = quad._integrate01_raw(_w8_integrand(3), ctx.target_bits)
    i3, _e3, _l3 = quad._integrate01_raw(
        _w8_integrand(4, first_power=True), ctx.target_bits
    )
    series_part = (
        constant_raw("zeta(2)")
        * (_euler_sum_sq_impl(2) + _euler_sum_impl(2, 2))
        / 6
    )
    return i5 / 3 + i3 + series_part


def _w8_integrand(s: int, first_power: bool = False):
    def f(x, xc):
        lg = quad._log_of(x, xc)
        w = lg if first_power else lg * lg
        return w * specfun._polylog_impl(s, x, xc) / xc

    return f


def _w9_impl() -> mpfr:
    """sum_n n^-3 sum_{k<=n} 1/(k 2^k), through the exact summation swap
    sum_k (zeta(3) - H_(k-1)^(3))/(k 2^k), which is geometric."""
    prec = gmpy2.get_context().precision
    eps = _eps()
    z3 = constant_raw("zeta(3)")
    total = mpfr(0)
    h3 = Fraction(0)  # H_(k-1)^(3)
    pw = mpfr(1)
    half = mpfr(1) / 2
    k = 0
    while True:
        k += 1
        pw *= half
        total += (z3 - _fr(h3)) * pw / k
        h3 += Fraction(1, k**3)
        if pw < eps * max(mpfr(1), abs(total)):
            return total
        if k > 64 * prec:
            raise MaxTermsExceeded("W9 sum stalled")


def _w10_impl() -> mpfr:
    """sum [(H_n)^2 + H_n^(2)]/(n 2^(n+1)), literal geometric sum."""
    eps = _eps()
    total = mpfr(0)
    h1 = Fraction(0)
    h2 = Fraction(0)
    pw = mpfr(1)
    half = mpfr(1) / 2
    n = 0
    while True:
        n += 1
        h1 += Fraction(1, n)
        h2 += Fraction(1, n**2)
        pw *= half
        t = (_fr(h1) ** 2 + _fr(h2)) * pw / (2 * n)
        total += t
        bound = pw * (_fr(h1) + 2) ** 2
        if bound < eps * max(mpfr(1), abs(total)):
            return total
        if n > 64 * gmpy2.get_context().precision:
            raise MaxTermsExceeded("W10 sum stalled")


def weighted_closed_form(ctx: PrecisionContext, family: str) -> Real:
    """Catalog closed form for W1..W10 (source misprints corrected; see docs)."""
    with workprec(ctx):
        z = lambda k: constant_raw(f"zeta({k})")
        log2 = constant_raw("log2")
        li4h = constant_raw("li4_half")
        if family == "W1":
            r = mpfr(5) / 8 * z(3)
        elif family == "W2":
            r = (
                li4h + mpfr(7) / 8 * z(3) * log2 - z(2) * log2**2 / 4
                + log2**4 / 24 - z(2) ** 2 / 8
            )
        elif family == "W3":
            li2m = specfun._polylog_impl(2, mpfr(-1) / 2)
            li3m = specfun._polylog_impl(3, mpfr(-1) / 2)
            li4m = specfun._polylog_impl(4, mpfr(-1) / 2)
            r = li4m - li3m * gmpy2.log(mpfr(3) / 2) - li2m**2 / 2
        elif family == "W4":
            r = z(3) ** 2 + z(6)
        elif family == "W5":
            r = z(2) ** 2 - mpfr(3) / 4 * z(4)
        elif family == "W6":
            r = 3 * z(2) * z(3) - mpfr(9) / 2 * z(5)
        elif family == "W7":
            r = z(2) * z(4) + z(3) ** 2 - _fr(Fraction(25, 12)) * z(6)
        elif family == "W8":
            r = mpfr(4) / 3 * z(3) ** 2 - _fr(Fraction(29, 12)) * z(6) + z(2) * z(4)
        elif family == "W9":
            r = z(3) * log2 / 8 + z(2) * log2**2 / 4 - log2**4 / 24 + z(2) ** 2 / 8
        elif family == "W10":
            r = mpfr(3) / 4 * z(3)
        else:
            raise DomainError(f"unknown weighted family {family!r}")
    return finish(ctx, r)


# ------------------------------------------------------- generating functions

_G_FAMILIES = ("G1", "G2", "G3", "G4", "G5", "G6", "G7")


def gen_function(ctx: PrecisionContext, family: str, x, p: int = 2, q: int = 2) -> Real:
    """Direct truncated series value of the generating-function families.

    G1: sum H_n x^n/n          G2: sum H_n^(2) x^n/n
    G3: sum [H_n^2+H_n^(2)] x^n/n   G4: sum [H^3+3HH^(2)+2H^(3)] x^n/n
    G5: sum H_n^(3) x^n/n      G6: sum H_n^2 x^n/n^2
    G7: sum H_n^(p) x^n/n^q + sum n^-p sum_{k<=n} x^k/k^q   (the Li_{p+q} blend)
    """
    if family not in _G_FAMILIES:
        raise DomainError(f"unknown generating family {family!r}")
    xf = Fraction(x) if not isinstance(x, Fraction) else x
    if abs(xf) >= 1:
        raise DomainError("gen_function needs |x| < 1")
    with workprec(ctx):
        r = _gen_series(family, xf, p, q)
    return finish(ctx, r)


def _gen_series(family: str, x: Fraction, p: int, q: int) -> mpfr:
    xm = _fr(x)
    eps = _eps()
    total = mpfr(0)
    h1 = Fraction(0)
    h2 = Fraction(0)
    h3 = Fraction(0)
    hp = Fraction(0)
    inner = mpfr(0)  # for G7's double sum
    xn = mpfr(1)
    n = 0
    while True:
        n += 1
        h1 += Fraction(1, n)
        h2 += Fraction(1, n**2)
        h3 += Fraction(1, n**3)
        xn *= xm
        if family == "G1":
            t = _fr(h1) * xn / n
            scale = _fr(h1)
        elif family == "G2":
            t = _fr(h2) * xn / n
            scale = _fr(h2)
        elif family == "G3":
            t = (_fr(h1) ** 2 + _fr(h2)) * xn / n
            scale = (_fr(h1) + 1) ** 2
        elif family == "G4":
            v1, v2, v3 = _fr(h1), _fr(h2), _fr(h3)
            t = (v1**3 + 3 * v1 * v2 + 2 * v3) * xn / n
            scale = (v1 + 2) ** 3
        elif family == "G5":
            t = _fr(h3) * xn / n
            scale = _fr(h3)
        elif family == "G6":
            t = _fr(h1) ** 2 * xn / mpfr(n) ** 2
            scale = (_fr(h1) + 1) ** 2
        else:  # G7
            hp += Fraction(1, n**p)
            inner += xn / mpfr(n) ** q
            t = _fr(hp) * xn / mpfr(n) ** q + inner / mpfr(n) ** p
            scale = mpfr(4)
        total += t
        bound = abs(xn) * scale / (1 - abs(xm))
        if bound < eps * max(mpfr(1), abs(total)):
            if family == "G7":
                total += _g7_tail(n, p, q, xm, xn)
            return total
        if n > 64 * gmpy2.get_context().precision:
            raise MaxTermsExceeded(f"{family} series stalled at |x|={float(abs(xm))}")


def _g7_tail(N: int, p: int, q: int, xm: mpfr, xN: mpfr) -> mpfr:
    """Tail of sum_{n>N} n^-p sum_{k<=n} x^k/k^q, whose inner sums tend to
    the constant Li_q(x): the constant part closes through zeta(p, N+1) and
    the geometric remainder is summed literally."""
    liq = specfun._polylog_impl(q, xm)
    tail = liq * emsum.hurwitz_impl(mpfr(p), mpfr(N + 1))
    # minus sum_{n>N} n^-p sum_{k>n} x^k/k^q
    eps = _eps()
    rem = mpfr(0)
    xk = +xN
    n = N
    while True:
        n += 1
        # R_n = sum_{k>n} x^k/k^q, built by one extra power each step
        xk *= xm
        rn = mpfr(0)
        xj = +xk
        j = n + 1
        while True:
            t = xj / mpfr(j) ** q
            rn += t
            if abs(xj) < eps:
                break
            xj *= xm
            j += 1
        rem += rn / mpfr(n) ** p
        if abs(xk) / (1 - abs(xm)) < eps * max(mpfr(1), abs(rem) + 1):
            break
    return tail - rem


def gen_closed_form(ctx: PrecisionContext, family: str, x, p: int = 2, q: int = 2) -> Real:
    """Polylogarithm closed form matching gen_function."""
    xf = Fraction(x) if not isinstance(x, Fraction) else x
    with workprec(ctx):
        xm = _fr(xf)
        Li = specfun._polylog_impl
        z = lambda k: constant_raw(f"zeta({k})")
        one_minus = 1 - xm
        y = -xm / one_minus  # the Landen argument
        if family in ("G3", "G4") and abs(y) > 1:
            raise DomainError(
                "polylog closed form for this family needs x <= 1/2"
            )
        if family in ("G2", "G6") and xm < 0:
            raise DomainError(
                "polylog closed form for this family needs 0 <= x < 1"
            )
        if family == "G1":
            r = -Li(2, y) if abs(y) <= 1 else _g1_large(xm)
        elif family == "G2":
            r = (
                2 * Li(3, one_minus) - 2 * z(3) + Li(3, xm)
                - gmpy2.log(one_minus) * (Li(2, one_minus) + z(2))
            )
        elif family == "G3":
            r = -2 * Li(3, y)
        elif family == "G4":
            r = -6 * Li(4, y)
        elif family == "G5":
            # with t = 1-x: Li4(x) - Li3(x) log(1-x) - Li2(x)^2/2
            r = Li(4, xm) - Li(3, xm) * gmpy2.log(one_minus) - Li(2, xm) ** 2 / 2
        elif family == "G6":
            lg = gmpy2.log(one_minus)
            r = (
                Li(4, xm) + Li(2, xm) ** 2 / 2
                - (
                    lg**3 * gmpy2.log(xm)
                    + 3 * lg**2 * Li(2, one_minus)
                    - 6 * lg * Li(3, one_minus)
                    + 6 * Li(4, one_minus)
                    - 6 * z(4)
                ) / 3
            )
        elif family == "G7":
            r = Li(p + q, xm) + z(p) * Li(q, xm)
        else:
            raise DomainError(f"unknown generating family {family!r}")
    return finish(ctx, r)


def _g1_large(xm: mpfr) -> mpfr:
    # G1 closed form in the half where -x/(1-x) leaves [-1,1]:
    # sum H_n x^n / n = log(1-x)^2/2 + Li2(x)
    return gmpy2.log(1 - xm) ** 2 / 2 + specfun._polylog_impl(2, xm)


# --------------------------------------------------------------- Knuth H-sums

def knuth_hsum(ctx: PrecisionContext, s: int, x) -> Real:
    """sum H_n x^n / n^s via the symmetric integral over Li_s, |x| <= 1."""
    if s < 1:
        raise DomainError("knuth_hsum needs s >= 1")
    xf = Fraction(x) if not isinstance(x, Fraction) else x
    if abs(xf) > 1 or (s == 1 and xf == 1):
        raise DomainError("knuth_hsum needs |x| <= 1, excluding (s, x) = (1, 1)")
    with workprec(ctx):
        xm = _fr(xf)
        Li = specfun._polylog_impl
        if xf == 1:
            zs = constant_raw(f"zeta({s})")

            def f(y, yc):
                return (zs - Li(s, y, yc)) / yc

        elif xf == -1:
            za = -(1 - mpfr(2) ** (1 - s)) * constant_raw(f"zeta({s})")

            def f(y, yc):
                return (za - Li(s, -y)) / yc

        else:
            lis_x = Li(s, xm)

            def f(y, yc):
                # substituting u = x t maps int_0^x [Li_s(x)-Li_s(u)]/(x-u) du
                # onto (0,1) with the removable point at t = 1
                return (lis_x - Li(s, xm * y)) / yc

        v, _e, _l = quad._integrate01_raw(f, ctx.target_bits)
    return finish(ctx, v)


# --------------------------------------------------- gamma bracketing sequence

def gamma_euler_bracket(ctx: PrecisionContext, N: int):
    """Partial sums (S_N, S_{N+1}) of the alternating e-and-pi series for gamma."""
    if N < 1:
        raise DomainError("need N >= 1")
    with workprec(ctx):
        sN = _gamma_series_partial(N)
        sN1 = _gamma_series_partial(N + 1)
    return finish(ctx, sN), finish(ctx, sN1)


def _gamma_series_partial(N: int) -> mpfr:
    pi = gmpy2.const_pi()
    e = gmpy2.exp(mpfr(1))
    total = (1 - 1 / e) / 2
    fact = mpfr(1)  # (2n-1)!
    for n in range(1, N + 1):
        for j in range(max(2 * n - 2, 1), 2 * n):
            fact *= j
        zn = constant_raw(f"zeta({2 * n})")
        # e^-1 sum_{k>=2n} 1/k! = 1 - e^-1 sum_{k<2n} 1/k!
        acc = mpfr(0)
        kfact = mpfr(1)
        for k in range(2 * n):
            if k > 0:
                kfact *= k
            acc += 1 / kfact
        sign = 1 if n % 2 == 1 else -1
        total += sign * fact * zn / (2 * pi) ** (2 * n) * (1 - acc / e)
    return total


# ----------------------------------------------------------- catalan provider

def _catalan_impl() -> mpfr:
    """Catalan constant by the Euler-transformed series over (2n+1)^-2."""
    return emsum.alternating_hasse(lambda k: (mpfr(2 * k) + 1) ** (-2))

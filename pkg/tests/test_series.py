from fractions import Fraction

import gmpy2
import mpmath
import pytest
from gmpy2 import mpfr

from zetaforge import mpcore, series, specfun
from zetaforge.errors import DivergentSeries, DomainError, MaxTermsExceeded

from conftest import assert_close

mpmath.mp.prec = 280

W2_VALUE = "0.720344856853789020715798957837110906341731"


def test_sum_series_basics(ctx128):
    # a 1/n bound certifies zeta(2) only at low precision in sensible time
    ctx = mpcore.ctx_new(16)
    v = series.sum_series(
        ctx,
        term=lambda n: Fraction(1, n * n),
        tail_bound=lambda n, partial: Fraction(1, n),
        kind="positive-decreasing",
    )
    with mpcore.workprec(ctx):
        want = mpcore.constant_raw("zeta(2)")
        assert_close(v, want, 16)
    assert series.sum_series(
        ctx128, term=lambda n: 0, tail_bound=lambda n, p: 0) == 0


def test_sum_series_geometric(ctx128):
    v = series.sum_series(
        ctx128,
        term=lambda n: Fraction(1, n * 2**n),
        tail_bound=lambda n, partial: Fraction(1, 2**n),
        kind="geometric-weighted",
    )
    with mpcore.workprec(ctx128):
        assert_close(v, mpcore.constant_raw("log2"), 124)


def test_sum_series_max_terms():
    ctx = mpcore.PrecisionContext(target_bits=64, max_terms=50)
    with pytest.raises(MaxTermsExceeded):
        series.sum_series(
            ctx, term=lambda n: Fraction(1, n * n),
            tail_bound=lambda n, p: Fraction(1, n))


def test_euler_transform_examples(ctx128):
    with mpcore.workprec(ctx128):
        log2 = mpcore.constant_raw("log2")
        want21 = 2 * log2 - 1
        G = mpcore.constant_raw("catalan")
    assert_close(series.euler_transform(
        ctx128, lambda n: Fraction(1, (n + 1) * (n + 2))), want21, 120)
    assert_close(series.euler_transform(
        ctx128, lambda n: Fraction(1, n + 1)), log2, 120)
    assert_close(series.euler_transform(
        ctx128, lambda n: Fraction(1, (2 * n + 1) ** 2)), G, 120)


def test_euler_transform_rejects_growth(ctx64):
    with pytest.raises(DivergentSeries):
        series.euler_transform(ctx64, lambda n: Fraction(n + 1))


def test_binomial_transform_divergence_certificate(ctx64):
    with pytest.raises(DivergentSeries):
        series.binomial_transform_sum(
            ctx64, lambda k: Fraction(1, k) if k else Fraction(0),
            scale="2^-n", start=1, alternating=False)


def test_euler_sums_against_closed_forms(ctx128):
    with mpcore.workprec(ctx128):
        z = mpcore.constant_raw
        checks = [
            (series.euler_sum(ctx128, 1, 2), 2 * z("zeta(3)")),
            (series.euler_sum(ctx128, 1, 3), z("pi") ** 4 / 72),
            (series.euler_sum(ctx128, 2, 2), mpfr(7) / 4 * z("zeta(4)")),
            (series.euler_sum(ctx128, 3, 2),
             mpfr(11) / 2 * z("zeta(5)") - 2 * z("zeta(2)") * z("zeta(3)")),
            (series.euler_sum_squared(ctx128, 2), mpfr(17) / 4 * z("zeta(4)")),
        ]
        for got, want in checks:
            assert abs(mpcore.to_mpfr(got) - want) < mpfr(2) ** -120 * abs(want)


def test_euler_sum_high_q_vs_mpmath(ctx128):
    ref = mpmath.nsum(
        lambda n: (mpmath.zeta(4) - mpmath.zeta(4, n + 1)) / n**6,
        [1, mpmath.inf])
    assert_close(series.euler_sum(ctx128, 4, 6), ref, 120)


def test_euler_sum_domain(ctx64):
    with pytest.raises(DomainError):
        series.euler_sum(ctx64, 0, 3)
    with pytest.raises(DomainError):
        series.euler_sum(ctx64, 2, 1)


def test_symmetric_check_pairs(ctx128):
    for p, q in ((2, 2), (2, 3), (3, 3), (3, 4)):
        lhs, rhs = series.euler_sum_symmetric_check(ctx128, p, q)
        assert_close(lhs, rhs, 120)


def test_weighted_families(ctx128):
    for fam in ("W1", "W2", "W3", "W4", "W5", "W6", "W7", "W8", "W9", "W10"):
        v = series.weighted_euler_sum(ctx128, fam)
        c = series.weighted_closed_form(ctx128, fam)
        assert_close(v, c, 110)
    assert_close(series.weighted_euler_sum(ctx128, "W2"), W2_VALUE, 120)


def test_tail_reversal_invariant(ctx128):
    # W2 = zeta(3) log 2 - W9 + Li4(1/2), exactly by the summation swap
    with mpcore.workprec(ctx128):
        w2 = mpcore.to_mpfr(series.weighted_euler_sum(ctx128, "W2"))
        w9 = mpcore.to_mpfr(series.weighted_euler_sum(ctx128, "W9"))
        want = (mpcore.constant_raw("zeta(3)") * mpcore.constant_raw("log2")
                - w9 + mpcore.constant_raw("li4_half"))
        assert abs(w2 - want) < mpfr(2) ** -118


def test_weighted_partial_sums_trend_toward_engine_value():
    # literal binomial-transform partial sums drift monotonically toward the
    # collapsed engine value (they converge only polynomially)
    ctx = mpcore.ctx_new(64)
    target = float(series.weighted_euler_sum(ctx, "W5"))
    with mpcore.workprec(ctx):
        import math

        def partial(N):
            tot = 0.0
            for n in range(1, N):
                inner = 0.0
                for k in range(1, n + 1):
                    hk2 = float(sum(Fraction(1, j * j) for j in range(1, k + 1)))
                    inner += math.comb(n, k) * hk2 / k**2
                tot += inner * 0.5 ** (n + 1)
            return tot

        p64, p128 = partial(64), partial(128)
        assert abs(p128 - target) < abs(p64 - target)
        assert abs(p128 - target) < 0.12


def test_gen_functions(ctx128):
    cases = [
        ("G1", Fraction(1, 2)), ("G2", Fraction(1, 3)), ("G3", Fraction(-1, 2)),
        ("G4", Fraction(1, 3)), ("G5", Fraction(-1, 2)), ("G6", Fraction(1, 2)),
    ]
    for fam, x in cases:
        assert_close(series.gen_function(ctx128, fam, x),
                     series.gen_closed_form(ctx128, fam, x), 116)


def test_gen_function_domain(ctx64):
    with pytest.raises(DomainError):
        series.gen_function(ctx64, "G2", 1)
    with pytest.raises(DomainError):
        series.gen_closed_form(ctx64, "G3", Fraction(3, 4))


def test_g1_closed_form_beyond_half(ctx128):
    # above x = 1/2 the Landen argument leaves [-1,1]; the log form takes over
    x = Fraction(7, 10)
    assert_close(series.gen_function(ctx128, "G1", x),
                 series.gen_closed_form(ctx128, "G1", x), 116)


def test_knuth_hsum_routes(ctx128):
    with mpcore.workprec(ctx128):
        want = 2 * mpcore.constant_raw("zeta(3)")
        assert_close(series.knuth_hsum(ctx128, 2, 1), want, 110)
    direct = series.gen_function(ctx128, "G1", Fraction(1, 2))
    assert_close(series.knuth_hsum(ctx128, 1, Fraction(1, 2)), direct, 110)
    with pytest.raises(DomainError):
        series.knuth_hsum(ctx128, 1, 1)


def test_alternating_euler_sum(ctx128):
    ref = mpmath.nsum(lambda n: (-1) ** n * mpmath.harmonic(n) / n**3,
                      [1, mpmath.inf])
    assert_close(series.alternating_euler_sum_13(ctx128), ref, 118)


def test_gamma_bracket_gaps_monotone(ctx128):
    with mpcore.workprec(ctx128):
        gaps = []
        for n in range(1, 9):
            a, b = series.gamma_euler_bracket(ctx128, n)
            gaps.append(abs(mpcore.to_mpfr(b) - mpcore.to_mpfr(a)))
        assert all(g2 <= g1 for g1, g2 in zip(gaps, gaps[1:]))


def test_limit_law(ctx64):
    # log n (zeta(2) - H_n^(2)) -> 0; below 1e-2 by n = 10^4
    with mpcore.workprec(ctx64):
        from zetaforge import emsum

        n = 10**4
        value = gmpy2.log(mpfr(n)) * emsum.hurwitz_impl(mpfr(2), mpfr(n + 1))
        assert value < mpfr("1e-2")


def test_sum_series_spec_object(ctx64):
    spec = series.SeriesSpec(
        term=lambda n: Fraction(1, n * 2**n),
        kind="geometric-weighted",
        tail_bound=lambda n, partial: Fraction(1, 2**n),
    )
    v = series.sum_series(ctx64, spec)
    with mpcore.workprec(ctx64):
        assert_close(v, mpcore.constant_raw("log2"), 60)

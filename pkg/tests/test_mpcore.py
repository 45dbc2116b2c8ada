from fractions import Fraction

import gmpy2
import pytest
from gmpy2 import mpfr
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaforge import mpcore
from zetaforge.errors import DomainError, PrecisionUnstable

from conftest import assert_close

PI_MACHIN = "3.14159265358979323846264338327950288419717"
EULER_GAMMA = "0.577215664901532860606512090082402431042159"
CATALAN = "0.915965594177219015054603514932384110774149"


def test_ctx_new_defaults():
    ctx = mpcore.ctx_new(128)
    assert ctx.target_bits == 128
    assert ctx.guard_bits == 32
    assert ctx.max_terms == 10_000_000
    big = mpcore.ctx_new(1024)
    assert (big.target_bits, big.guard_bits) == (1024, 32)


@pytest.mark.parametrize("bad", [15, 8, 0, -64])
def test_ctx_new_rejects_small_targets(bad):
    with pytest.raises(DomainError):
        mpcore.ctx_new(bad)


def test_guard_bits_floor():
    with pytest.raises(DomainError):
        mpcore.PrecisionContext(target_bits=64, guard_bits=4)


def test_ladder_check_stable(ctx128):
    from zetaforge import specfun

    v = mpcore.ladder_check(lambda c: specfun.zeta(c, 3), ctx128)
    assert_close(v, "1.20205690315959428539973816151144999076499", 120)


def test_ladder_check_zero(ctx128):
    v = mpcore.ladder_check(lambda c: mpfr(0), ctx128)
    assert v == 0


def test_ladder_check_flags_truncation(ctx128):
    # a thunk whose truncation error is ~2^(-P/2) must trip the ladder
    def sloppy(ctx):
        with mpcore.workprec(ctx):
            err = mpfr(2) ** (-(ctx.target_bits // 2))
            return mpcore.constant_raw("pi") + err
    with pytest.raises(PrecisionUnstable):
        mpcore.ladder_check(sloppy, ctx128)


@settings(max_examples=60, deadline=None)
@given(
    p=st.integers(min_value=-(2**64) + 1, max_value=2**64 - 1),
    q=st.integers(min_value=1, max_value=2**64 - 1),
)
def test_rational_round_trip(p, q):
    # Real(p/q) at 256 bits reconstructs p/q to 2^-250 (relative)
    frac = Fraction(p, q)
    ctx = mpcore.ctx_new(256)
    with mpcore.workprec(ctx):
        x = mpcore.to_mpfr(frac)
        if p == 0:
            assert x == 0
            return
        rel = abs(x - mpcore.to_mpfr(frac)) + abs(
            (x * q - p) / mpcore.to_mpfr(frac) / q
        )
        assert rel <= mpfr(2) ** -250


def test_pi_matches_arctan_oracle(ctx128):
    assert_close(mpcore.constant(ctx128, "pi"), PI_MACHIN, 126)


def test_gamma_and_catalan(ctx128):
    assert_close(mpcore.constant(ctx128, "gamma"), EULER_GAMMA, 126)
    assert_close(mpcore.constant(ctx128, "catalan"), CATALAN, 126)


def test_unknown_constant(ctx64):
    with pytest.raises(DomainError):
        mpcore.constant(ctx64, "feigenbaum")
    with pytest.raises(DomainError):
        mpcore.constant(ctx64, "zeta(1)")


@pytest.mark.parametrize("name", [
    "pi", "log2", "e", "gamma", "catalan", "zeta(2)", "zeta(3)", "zeta(7)",
    "zeta'(2)", "zeta'(-1)", "zeta'(-2)", "log_A", "li2_half", "li3_half",
    "li4_half",
])
def test_constant_ladder_stability(name):
    for bits in (64, 128, 256):
        ctx = mpcore.ctx_new(bits)
        mpcore.ladder_check(lambda c, n=name: mpcore.constant(c, n), ctx)


def test_cache_agrees_with_double_precision(ctx128):
    # cached value at P within 2^-P of a fresh 2P evaluation
    for name in ("zeta(3)", "catalan", "zeta'(-1)"):
        lo = mpcore.constant(ctx128, name)
        hi = mpcore.constant(ctx128.doubled(), name)
        assert_close(lo, hi, ctx128.target_bits - 1)


def test_zeta_prime_m1_two_routes(ctx128):
    # formula route in the cache vs direct analytic continuation
    from zetaforge import emsum

    with mpcore.workprec(ctx128):
        a = mpcore.constant_raw("zeta'(-1)")
        b = emsum.hurwitz_impl(mpfr(-1), mpfr(1), deriv=1)
        assert abs(a - b) < mpfr(2) ** (-ctx128.target_bits)


def test_finish_rejects_nonfinite(ctx64):
    with pytest.raises(DomainError):
        mpcore.finish(ctx64, mpfr("inf"))
    with pytest.raises(DomainError):
        mpcore.finish(ctx64, mpfr("nan"))


def test_fmt_real_locale_independent(ctx64):
    with mpcore.workprec(ctx64):
        s = mpcore.fmt_real(mpfr("0.25"), 10)
    assert "." in s and "," not in s

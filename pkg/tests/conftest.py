import gmpy2
import pytest
from gmpy2 import mpfr

from zetaforge import mpcore


@pytest.fixture(scope="session")
def ctx64():
    return mpcore.ctx_new(64)


@pytest.fixture(scope="session")
def ctx128():
    return mpcore.ctx_new(128)


@pytest.fixture(scope="session")
def ctx256():
    return mpcore.ctx_new(256)


def _as_mpfr(x):
    from fractions import Fraction

    if isinstance(x, mpfr):
        return +x
    if isinstance(x, Fraction):
        return mpfr(x.numerator) / mpfr(x.denominator)
    return mpfr(str(x))


def assert_close(value, expected, bits, ctx=None):
    """|value - expected| < 2^-bits relative to max(1, |expected|)."""
    with gmpy2.context(precision=max(bits + 64, 128)):
        v = _as_mpfr(value)
        e = _as_mpfr(expected)
        diff = abs(v - e)
        bound = mpfr(2) ** (-bits) * max(mpfr(1), abs(e))
        assert diff <= bound, f"|{v} - {e}| = {diff} > 2^-{bits}"

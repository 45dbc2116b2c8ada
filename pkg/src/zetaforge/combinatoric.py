"""Exact rational evaluation of the finite binomial/harmonic identity families.

Everything here is computed in exact arithmetic (Fraction / int), so the
identity checks built on top of this module carry no tolerances at all.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .errors import DomainError

Rational = Fraction


class HarmonicTable:
    """Cache of generalized harmonic numbers H_n^(r) = sum_{k<=n} k^-r."""

    def __init__(self, n_max: int = 64):
        self.n_max = n_max
        self._rows: dict[int, list[Fraction]] = {}
        self._lock = threading.Lock()

    def value(self, n: int, r: int) -> Fraction:
        if n < 0:
            raise DomainError("harmonic order n must be >= 0")
        if r < 1:
            raise DomainError("harmonic power r must be >= 1")
        if n > self.n_max:
            # computed on demand, deliberately uncached to bound memory
            return sum((Fraction(1, k**r) for k in range(1, n + 1)), Fraction(0))
        with self._lock:
            row = self._rows.get(r)
            if row is None:
                row = [Fraction(0)]
                self._rows[r] = row
            while len(row) <= n:
                k = len(row)
                row.append(row[k - 1] + Fraction(1, k**r))
            return row[n]


class BernoulliTable:
    """Bernoulli numbers B_n (B_1 = -1/2 convention) and polynomial rows."""

    def __init__(self, n_max: int = 64):
        self.n_max = n_max
        self._vals: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
        self._lock = threading.Lock()

    def number(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError("Bernoulli index must be >= 0")
        if n % 2 == 1 and n > 1:
            return Fraction(0)
        with self._lock:
            while len(self._vals) <= n:
                m = len(self._vals)
                if m % 2 == 1:
                    self._vals.append(Fraction(0))
                    continue
                acc = Fraction(0)
                for k in range(m):
                    acc += comb(m + 1, k) * self._vals[k]
                self._vals.append(-acc / (m + 1))
            return self._vals[n]

    def poly(self, n: int, x: Fraction) -> Fraction:
        """B_n(x) = sum_k C(n,k) B_k x^(n-k)."""
        x = Fraction(x)
        return sum(
            comb(n, k) * self.number(k) * x ** (n - k) for k in range(n + 1)
        )


harmonic_table = HarmonicTable()
bernoulli_table = BernoulliTable()


def harmonic(n: int, r: int = 1) -> Fraction:
    """Exact H_n^(r)."""
    return harmonic_table.value(n, r)


def binomial(n: int, k: int) -> int:
    """C(n,k); zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def bernoulli(n: int) -> Fraction:
    return bernoulli_table.number(n)


def bernoulli_poly(n: int, x) -> Fraction:
    return bernoulli_table.poly(n, Fraction(x))


def alt_binomial_sum(n: int, p: int) -> Fraction:
    """sum_{k=0..n} C(n,k) (-1)^k / (k+1)^p, exactly."""
    if n < 0 or p < 1:
        raise DomainError("need n >= 0 and p >= 1")
    return sum(
        Fraction((-1) ** k * comb(n, k), (k + 1) ** p) for k in range(n + 1)
    )


def plus_binomial_sum(n: int) -> Fraction:
    """sum_{k=0..n} C(n,k)/(k+1); closed form (2^(n+1)-1)/(n+1)."""
    if n < 0:
        raise DomainError("need n >= 0")
    return sum(Fraction(comb(n, k), k + 1) for k in range(n + 1))


def larcombe_sum(m: int, n: int, p: int) -> Fraction:
    """Prefactored alternating binomial sum over 1/(m+k)^p.

    p=1,2 carry the plain m*C(m+n,n) prefactor; p=3 doubles it and p=4
    carries 6*m*C(m+n,n), matching the closed forms they equal.
    """
    if m < 1 or n < 0 or p not in (1, 2, 3, 4):
        raise DomainError("need m >= 1, n >= 0, p in 1..4")
    core = sum(
        Fraction((-1) ** k * comb(n, k), (m + k) ** p) for k in range(n + 1)
    )
    prefactor = {1: 1, 2: 1, 3: 2, 4: 6}[p] * m * comb(m + n, n)
    return prefactor * core


def larcombe_rhs(m: int, n: int, p: int) -> Fraction:
    """The closed form larcombe_sum equals: power sums of 1/k over k=m..m+n."""
    s1 = sum(Fraction(1, k) for k in range(m, m + n + 1))
    if p == 1:
        return Fraction(1)
    if p == 2:
        return s1
    s2 = sum(Fraction(1, k**2) for k in range(m, m + n + 1))
    if p == 3:
        return s1**2 + s2
    s3 = sum(Fraction(1, k**3) for k in range(m, m + n + 1))
    if p == 4:
        return s1**3 + 3 * s1 * s2 + 2 * s3
    raise DomainError("p in 1..4")


def reciprocal_binomial_sum(n: int) -> Fraction:
    """sum_{k=0..n} 1/C(n,k), exactly."""
    if n < 0:
        raise DomainError("need n >= 0")
    return sum(Fraction(1, comb(n, k)) for k in range(n + 1))


def reciprocal_binomial_rhs(n: int) -> Fraction:
    """(n+1)/2^(n+1) * sum_{k=1..n+1} 2^k/k."""
    acc = sum(Fraction(2**k, k) for k in range(1, n + 2))
    return Fraction(n + 1, 2 ** (n + 1)) * acc


def binomial_inversion(seq: list[Fraction]) -> list[Fraction]:
    """b_n = sum_{k=0..n} (-1)^k C(n,k) a_k; applying it twice is the identity."""
    seq = [Fraction(a) for a in seq]
    out = []
    for n in range(len(seq)):
        out.append(
            sum((-1) ** k * comb(n, k) * seq[k] for k in range(n + 1))
        )
    return out


def adamchik_partial(n: int, which: str) -> tuple[Fraction, Fraction]:
    """(LHS, RHS) of the three partial-sum identities over H_k weights.

    i:   sum H_k/k            vs  (H_n^2 + H_n^(2))/2
    ii:  sum H_k^(2)/k + sum H_k/k^2  vs  H_n^(3) + H_n H_n^(2)
    iii: sum (H_k^2 + H_k^(2))/k      vs  (H_n^3 + 3 H_n H_n^(2) + 2 H_n^(3))/3
    """
    if n < 1:
        raise DomainError("need n >= 1")
    h1 = harmonic(n, 1)
    h2 = harmonic(n, 2)
    h3 = harmonic(n, 3)
    if which == "i":
        lhs = sum(harmonic(k, 1) / k for k in range(1, n + 1))
        rhs = Fraction(1, 2) * h1**2 + Fraction(1, 2) * h2
    elif which == "ii":
        lhs = sum(harmonic(k, 2) / k for k in range(1, n + 1)) + sum(
            harmonic(k, 1) / Fraction(k**2) for k in range(1, n + 1)
        )
        rhs = h3 + h1 * h2
    elif which == "iii":
        lhs = sum(
            (harmonic(k, 1) ** 2 + harmonic(k, 2)) / k for k in range(1, n + 1)
        )
        rhs = Fraction(1, 3) * (h1**3 + 3 * h1 * h2 + 2 * h3)
    else:
        raise DomainError("which must be 'i', 'ii' or 'iii'")
    return lhs, rhs


def triple_nested_sum(n: int) -> Fraction:
    """sum_{k<=n} 1/k sum_{j<=k} 1/j sum_{l<=j} 1/l, exactly."""
    if n < 1:
        raise DomainError("need n >= 1")
    # innermost sum is H_j, so the triple sum is sum_k (1/k) sum_{j<=k} H_j/j
    acc = Fraction(0)
    run = Fraction(0)
    for k in range(1, n + 1):
        run += harmonic(k, 1) / k
        acc += run / k
    return acc


def triple_nested_rhs(n: int) -> Fraction:
    h1, h2, h3 = harmonic(n, 1), harmonic(n, 2), harmonic(n, 3)
    return Fraction(1, 6) * (h1**3 + 3 * h1 * h2 + 2 * h3)


def binomial_over_k_sum(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_{k=1..n} C(n,k)/k = sum_{k=1..n} (2^k - 1)/k."""
    lhs = sum(Fraction(comb(n, k), k) for k in range(1, n + 1))
    rhs = sum(Fraction(2**k - 1, k) for k in range(1, n + 1))
    return lhs, rhs

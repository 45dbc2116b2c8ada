"""Acceptance gate: every criterion at its pinned tolerance, one line each.

Run with -rP (or -s) to see the per-criterion pass lines.  Criteria touch
the engines through the registry so the residuals reported here are the
same numbers a verification sweep emits.  Closed-form constants corrected
against source misprints are marked "corrected" in the catalog
descriptions; the negative entries in criterion 7 pin the misprints.
"""

import time
from fractions import Fraction

import gmpy2
import pytest
from gmpy2 import mpfr

from zetaforge import combinatoric, mpcore, quad, registry, series, specfun

CTX128 = mpcore.ctx_new(128)
CTX256 = mpcore.ctx_new(256)

TIGHT_120 = mpfr(2) ** -120
TIGHT_110 = mpfr(2) ** -110
QUAD_TOL = mpfr(10) ** -25
FOURIER_TOL = mpfr(10) ** -20


def _announce(n, ok, detail):
    line = f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    assert ok, line


def _ids_by_prefix(prefixes):
    return [i.id for i in registry.catalog()
            if any(i.id.startswith(p) for p in prefixes)]


def _run(ids, ctx=CTX128):
    rep = registry.verify_all(ctx, ids=ids)
    bad = [r for r in rep.results if r.status == "fail"]
    return rep, bad


def test_criterion_1_exact_suite():
    t0 = time.perf_counter()
    rep = registry.verify_all(CTX128, tags=["exact"])
    elapsed = time.perf_counter() - t0
    bad = [r.id for r in rep.results if r.status != "pass"]
    nonliteral = [r.id for r in rep.results if r.residual != "0"]
    ok = not bad and not nonliteral and elapsed < 5.0 and len(rep.results) >= 15
    _announce(1, ok,
              f"{len(rep.results)} exact rational identities, literal "
              f"equality, {elapsed:.2f}s (< 5s)")


def test_criterion_2_euler_sums():
    t0 = time.perf_counter()
    ids = ["EQ-4.4.163", "EQ-4.4.167u", "EQ-4.4.168", "EQ-4.4.167s",
           "EQ-4.4.168p", "EQ-4.4.233",
           "EQ-4.4.232a-23", "EQ-4.4.232a-24", "EQ-4.4.232a-34"]
    rep, bad = _run(ids)
    elapsed = time.perf_counter() - t0
    worst = max(mpfr(r.residual) for r in rep.results)
    ok = not bad and worst < TIGHT_120 and elapsed < 30.0
    _announce(2, ok,
              f"9 Euler-sum identities, worst residual {float(worst):.3e} "
              f"(< 2^-120), {elapsed:.1f}s (< 30s)")


def test_criterion_3_weighted_suite():
    t0 = time.perf_counter()
    ids = [registry._W_TAGS[f][0] for f in
           ("W1", "W2", "W3", "W4", "W5", "W6", "W7", "W8", "W9", "W10")]
    rep, bad = _run(ids)
    elapsed = time.perf_counter() - t0
    worst = max(mpfr(r.residual) for r in rep.results)
    corrected = sum(
        1 for i in registry.catalog()
        if i.id in ids and i.description.startswith("corrected:"))
    ok = not bad and worst < TIGHT_110 and elapsed < 60.0
    _announce(3, ok,
              f"W1..W10, worst residual {float(worst):.3e} (< 2^-110), "
              f"{corrected} closed forms corrected vs source misprints "
              f"(see ledger), {elapsed:.1f}s (< 60s)")


def test_criterion_4_integral_suite():
    t0 = time.perf_counter()
    integral_ids = [v[0] for v in registry._INTEGRAL_TABLE.values()]
    fourier_ids = [f"EQ-4.4.229{c}-n{n}" for c in ("f", "h", "hi")
                   for n in (1, 2, 3)]
    rep, bad = _run(integral_ids)
    repf, badf = _run(fourier_ids)
    elapsed = time.perf_counter() - t0
    worst_i = max(mpfr(r.residual) for r in rep.results)
    worst_f = max(mpfr(r.residual) for r in repf.results)
    ok = (not bad and not badf and worst_i < QUAD_TOL
          and worst_f < FOURIER_TOL and elapsed < 120.0)
    _announce(4, ok,
              f"I1..I30 worst residual {float(worst_i):.3e} (< 1e-25); Fourier "
              f"n=1..3 worst {float(worst_f):.3e} (< 1e-20); {elapsed:.1f}s (< 120s)")


def test_criterion_5_hurwitz_clausen_suite():
    ids = (["EQ-4.4.203", "EQ-4.4.228pii", "EQ-4.4.229k-half",
            "EQ-4.4.229k-quarters", "EQ-4.4.219", "EQ-4.4.228r-clausen"]
           + [i.id for i in registry.catalog()
              if i.id.startswith("EQ-4.4.229iv-") or
              i.id.startswith("EQ-4.4.229l-")])
    rep, bad = _run(ids)
    worst = max(mpfr(r.residual) for r in rep.results)
    ok = not bad and worst < TIGHT_110
    _announce(5, ok,
              f"{len(rep.results)} Hurwitz-derivative/Clausen identities, "
              f"worst residual {float(worst):.3e} (< 2^-110)")


def test_criterion_6_mellin_grid():
    rep, bad = _run(["EQ-4.4.195", "EQ-4.4.192", "EQ-4.4.194"])
    by_id = {r.id: r for r in rep.results}
    grid_resid = mpfr(by_id["EQ-4.4.195"].residual)
    g3_resid = mpfr(by_id["EQ-4.4.194"].residual)
    ok = not bad and grid_resid < QUAD_TOL and g3_resid < mpfr(10) ** -30
    _announce(6, ok,
              f"3x3x5 log-moment grid residual {float(grid_resid):.3e} (< 1e-25); "
              f"Gamma'''(1) residual {float(g3_resid):.3e} (< 1e-30)")


def test_criterion_7_negative_tests():
    # the cot-integral must equal pi/24 and stay far from both printed
    # values it is historically confused with
    qv, cv = quad.named_integral(CTX128, "I19")
    with mpcore.workprec(CTX128):
        pi = mpcore.constant_raw("pi")
        z3 = mpcore.constant_raw("zeta(3)")
        resid_true = abs(mpcore.to_mpfr(qv) - pi / 24)
        gap_48 = abs(mpcore.to_mpfr(qv) - pi / 48)
        gap_paper = abs(mpcore.to_mpfr(qv) - (-z3 / (8 * pi**3) + pi / 24))
    rep, bad = _run([i.id for i in registry.catalog() if "negative" in i.tags])
    ok = (not bad and resid_true < QUAD_TOL
          and gap_48 > mpfr("1e-3") and gap_paper > mpfr("1e-3"))
    _announce(7, ok,
              f"cot-integral = pi/24 (residual {float(resid_true):.3e}); differs "
              f"from pi/48 by {float(gap_48):.4f} and from the misprinted "
              f"correction by {float(gap_paper):.4f} (> 1e-3); "
              f"{len(rep.results)} negative guards pass")


def test_criterion_8_constant_cross_derivations():
    rep, bad = _run(["EQ-4.4.205", "EQ-4.4.224", "EQ-4.4.225"])
    worst = max(mpfr(r.residual) for r in rep.results)
    adv = registry.verify(CTX128, "ADV-4.4.226")
    with mpcore.workprec(CTX128):
        glaisher_ok = adv.status == "pass" and mpfr(adv.residual) < mpfr("1e-6")
    ok = not bad and worst < TIGHT_120 and glaisher_ok
    _announce(8, ok,
              f"zeta'(-1) derivations agree to {float(worst):.3e} (< 2^-120); "
              f"Glaisher limit at n=10^4 within {float(mpfr(adv.residual)):.3e} "
              f"(< 1e-6, advisory)")


@pytest.fixture(scope="module")
def full_reports():
    rep128 = registry.verify_all(CTX128)
    rep256 = registry.verify_all(CTX256)
    return rep128, rep256


def test_criterion_9_property_layer(full_reports):
    rep128, rep256 = full_reports
    pass128 = {r.id for r in rep128.results if r.status == "pass"}
    status256 = {r.id: r.status for r in rep256.results}
    broken = sorted(i for i in pass128 if status256.get(i) != "pass")

    from zetaforge.errors import DivergentSeries
    try:
        series.binomial_transform_sum(
            CTX128, lambda k: Fraction(1, k) if k else Fraction(0),
            scale="2^-n", start=1, alternating=False)
        divergence_ok = False
    except DivergentSeries:
        divergence_ok = True

    kummer = registry.verify(CTX128, "ADV-4.4.210")

    with mpcore.workprec(CTX128, extra=64):
        h = mpfr(2) ** -45
        worst_fd = mpfr(0)
        for k in range(1, 11):
            theta = mpfr(k) / 2
            fd = (specfun._clausen_impl(2, theta + h)
                  - specfun._clausen_impl(2, theta - h)) / (2 * h)
            want = -gmpy2.log(abs(2 * gmpy2.sin(theta / 2)))
            worst_fd = max(worst_fd, abs(fd - want) / max(mpfr(1), abs(want)))

    ok = (not broken and divergence_ok and kummer.status == "pass"
          and worst_fd < mpfr("1e-10"))
    _announce(9, ok,
              f"monotone precision 128->256 bits ({len(pass128)} ids, "
              f"{len(broken)} regressions); P_1(1) divergence certified; "
              f"Kummer rate ok; Cl_2 derivative fd-residual {float(worst_fd):.2e} "
              f"(< 1e-10)")


def test_criterion_10_gamma_bracket_advisory(full_reports):
    rep128, _ = full_reports
    entry = next(r for r in rep128.results if r.id == "ADV-4.4.252a")
    # the series is numerically false; advisory status must never fail a run
    ok = entry.status in ("pass", "advisory") and rep128.counts["fail"] == 0
    _announce(10, ok,
              f"gamma bracket reports '{entry.status}' (residual "
              f"{float(mpfr(entry.residual)):.3e}); advisory entries never break "
              f"the build; full 128-bit sweep: {rep128.counts['pass']} pass, "
              f"{rep128.counts['fail']} fail, "
              f"{rep128.counts['advisory']} advisory")

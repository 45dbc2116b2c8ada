"""FastAPI service wrapping the evaluation and verification engines.

The service owns the long-lived state worth sharing (constant caches,
quadrature node tables, the identity catalog); the CLI is a thin client of
this API, either over the wire or through an in-process ASGI transport.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException

from .. import combinatoric, mpcore, quad, registry, series, specfun
from ..errors import DomainError, UnknownIdentity, ZetaforgeError
from .models import (EvalRequest, EvalResponse, HealthResponse, IdentityInfo,
                     ReportModel, VerifyRequest)

_CONSTANT_LITERALS = {"pi": "pi", "e": "e", "log2": "log2"}


def parse_literal(tok: str, ctx: mpcore.PrecisionContext):
    """Argument literal: integers, p/q rationals, decimals, and the tokens
    pi, e, log2 with optional integer numerator/denominator (e.g. 2*pi/3)."""
    tok = tok.strip()
    neg = tok.startswith("-")
    if neg:
        tok = tok[1:]
    coef = Fraction(1)
    body = tok
    if "*" in tok:
        pre, body = tok.split("*", 1)
        coef = Fraction(int(pre))
    den = Fraction(1)
    if "/" in body:
        body, d = body.split("/", 1)
        den = Fraction(int(d))
    if body in _CONSTANT_LITERALS:
        with mpcore.workprec(ctx):
            v = mpcore.constant_raw(_CONSTANT_LITERALS[body])
            v = v * mpcore.to_mpfr(coef / den)
            return -v if neg else +v
    # pure rational / integer / decimal
    scaled = coef / den
    try:
        r = Fraction(body) * scaled
        return -r if neg else r
    except ValueError:
        pass
    with mpcore.workprec(ctx):
        v = mpcore.to_mpfr(body) * mpcore.to_mpfr(scaled)
        return -v if neg else +v


def _int_arg(v) -> int:
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    raise DomainError(f"expected an integer argument, got {v}")


# function name -> (callable(ctx, *parsed), exact?)
def _eval_table():
    return {
        "constant": lambda ctx, name: mpcore.constant(ctx, str(name)),
        "zeta": specfun.zeta,
        "zeta_alt": specfun.zeta_alt,
        "zeta_prime": specfun.zeta_prime,
        "zeta_second": specfun.zeta_second,
        "hurwitz_zeta": specfun.hurwitz_zeta,
        "hurwitz_zeta_alt": specfun.hurwitz_zeta_alt,
        "hurwitz_zeta_sderiv": specfun.hurwitz_zeta_sderiv,
        "dirichlet_beta": specfun.dirichlet_beta,
        "polylog": lambda ctx, s, x: specfun.polylog(ctx, _int_arg(s), x),
        "clausen": lambda ctx, n, theta: specfun.clausen(
            ctx, _int_arg(n), theta),
        "sin_integral": specfun.sin_integral,
        "log_gamma": specfun.log_gamma,
        "polygamma": lambda ctx, k, x: specfun.polygamma(ctx, _int_arg(k), x),
        "gamma_deriv": lambda ctx, j, x: specfun.gamma_deriv(
            ctx, _int_arg(j), x),
        "barnes_log_g": specfun.barnes_log_g,
        "euler_sum": lambda ctx, p, q: series.euler_sum(
            ctx, _int_arg(p), _int_arg(q)),
        "euler_sum_squared": lambda ctx, q: series.euler_sum_squared(
            ctx, _int_arg(q)),
        "weighted_euler_sum": lambda ctx, fam: series.weighted_euler_sum(
            ctx, str(fam)),
        "gen_function": lambda ctx, fam, x: series.gen_function(
            ctx, str(fam), _frac(x)),
        "knuth_hsum": lambda ctx, s, x: series.knuth_hsum(
            ctx, _int_arg(s), _frac(x)),
        "named_integral": lambda ctx, name: quad.named_integral(
            ctx, str(name))[0],
        "mellin_log_moment": lambda ctx, x, k, n: quad.mellin_log_moment(
            ctx, _real(x), _real(k), _int_arg(n)),
        # exact surfaces
        "harmonic": lambda ctx, n, r: combinatoric.harmonic(
            _int_arg(n), _int_arg(r)),
        "binomial": lambda ctx, n, k: combinatoric.binomial(
            _int_arg(n), _int_arg(k)),
        "bernoulli": lambda ctx, n: combinatoric.bernoulli(_int_arg(n)),
        "bernoulli_poly": lambda ctx, n, x: combinatoric.bernoulli_poly(
            _int_arg(n), _frac(x)),
    }


def _frac(v):
    if isinstance(v, Fraction):
        return v
    raise DomainError("this function needs an exact rational argument")


_STRING_ARG_FUNCTIONS = {
    ("constant", 0), ("weighted_euler_sum", 0), ("gen_function", 0),
    ("named_integral", 0),
}


def eval_function(name: str, raw_args: list[str],
                  ctx: mpcore.PrecisionContext):
    """Shared eval implementation for the service and thin clients.

    Returns (value_string, exact_flag).
    """
    table = _eval_table()
    if name not in table:
        raise UnknownIdentity(f"unknown function {name!r}")
    parsed = []
    for pos, tok in enumerate(raw_args):
        if (name, pos) in _STRING_ARG_FUNCTIONS:
            parsed.append(tok)
        else:
            parsed.append(parse_literal(tok, ctx))
    try:
        result = table[name](ctx, *parsed)
    except TypeError as exc:
        raise DomainError(f"bad arguments for {name}: {exc}") from exc
    if isinstance(result, (Fraction, int)):
        return str(result), True
    return mpcore.fmt_real(result, ctx.decimal_digits()), False


def create_app() -> FastAPI:
    app = FastAPI(
        title="zetaforge",
        description=(
        "High-precision zeta/harmonic/polylogarithm evaluation and a "
        "machine-checkable identity catalog with residual reports."
        ),
        version="0.1.0",
    )

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(
            status="ok",
            identities=len(registry.catalog()),
            constants=list(mpcore.constant_names()),
        )

    @app.get("/identities", response_model=list[IdentityInfo])
    def identities(tag: str | None = None):
        rows = registry.catalog_metadata()
        if tag is not None:
            rows = [r for r in rows if tag in r["tags"]]
        return [IdentityInfo(**r) for r in rows]

    @app.get("/identities/{ident_id}", response_model=IdentityInfo)
    def identity_detail(ident_id: str):
        for r in registry.catalog_metadata():
            if r["id"] == ident_id:
                return IdentityInfo(**r)
        raise HTTPException(status_code=404, detail=f"unknown identity {ident_id!r}")

    @app.get("/audit")
    def audit():
        return registry.scope_audit()

    @app.post("/eval", response_model=EvalResponse)
    def eval_endpoint(req: EvalRequest):
        try:
            ctx = mpcore.PrecisionContext(
                target_bits=req.bits, guard_bits=req.guard_bits
            )
            value, exact = eval_function(req.function, req.args, ctx)
        except UnknownIdentity as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except (DomainError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except ZetaforgeError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return EvalResponse(
            function=req.function, args=req.args, value=value,
            exact=exact, bits=req.bits,
        )

    @app.post("/verify", response_model=ReportModel)
    def verify_endpoint(req: VerifyRequest):
        try:
            ctx = mpcore.PrecisionContext(
                target_bits=req.bits, guard_bits=req.guard_bits
            )
        except DomainError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        if req.ids:
            known = {i.id for i in registry.catalog()}
            missing = [i for i in req.ids if i not in known]
            if missing:
                raise HTTPException(
                    status_code=404, detail=f"unknown identities: {missing}"
                )
        report = registry.verify_all(
            ctx, tags=req.tags, ids=req.ids,
            workers=req.workers, tol_override=req.tol,
        )
        return ReportModel(**report.to_json_dict())

    return app


app = create_app()

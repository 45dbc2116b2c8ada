"""Command-line front door: a thin client over the HTTP service.

By default the client talks to an in-process instance of the FastAPI app
through an ASGI transport, so no server needs to be running; point
--server (or ZETAFORGE_SERVER) at a URL to use a remote instance instead.
Default precision comes from --bits or the ZETAFORGE_BITS variable.

Exit codes: 0 all requested checks pass, 1 verification failure,
2 usage error (unknown id/function, bad arguments).
"""

from __future__ import annotations

import json
import os
import sys

import click
import httpx

USAGE_ERROR = 2
VERIFY_FAILURE = 1


def _request(server: str | None, method: str, path: str, **kw) -> httpx.Response:
    """One request against the remote server or the in-process ASGI app."""
    if server:
        with httpx.Client(base_url=server, timeout=3600.0) as client:
            return client.request(method, path, **kw)
    import asyncio

    from .service import app

    async def go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport,
            base_url="http://zetaforge.internal",
            timeout=3600.0,
        ) as client:
            return await client.request(method, path, **kw)

    return asyncio.run(go())


def _default_bits() -> int:
    env = os.environ.get("ZETAFORGE_BITS")
    return int(env) if env else 128


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        click.echo(text)


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Remote service URL (default: in-process engine).")
@click.pass_context
def main(ctx, server):
    """High-precision special functions and the identity verification catalog."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command("eval", context_settings={"ignore_unknown_options": True})
@click.argument("function")
@click.argument("args", nargs=-1)
@click.option("--bits", type=int, default=_default_bits, show_default="128",
              help="Target precision in bits (ZETAFORGE_BITS).")
@click.option("--out", default=None, help="Write output to a file.")
@click.pass_context
def eval_cmd(ctx, function, args, bits, out):
    """Evaluate FUNCTION at the given arguments.

    Arguments accept integers, rationals like 3/4, decimals, and the tokens
    pi, e, log2 (optionally scaled: pi/2, 2*pi/3).  Example:

        zetaforge eval zeta 3 --bits 128
    """
    resp = _request(ctx.obj["server"], "POST", "/eval", json={
        "function": function, "args": list(args), "bits": bits,
    })
    if resp.status_code == 404:
        click.echo(f"error: {resp.json()['detail']}", err=True)
        sys.exit(USAGE_ERROR)
    if resp.status_code >= 400:
        click.echo(f"error: {resp.json()['detail']}", err=True)
        sys.exit(USAGE_ERROR)
    _emit(resp.json()["value"], out)


def _run_verify(ctx, ids, all_, bits, tol, tags, fmt, out, workers):
    if not ids and not all_ and not tags:
        click.echo("error: give identity ids, --tag filters, or --all", err=True)
        sys.exit(USAGE_ERROR)
    payload = {"bits": bits, "workers": workers}
    if ids:
        payload["ids"] = list(ids)
    if tags:
        payload["tags"] = list(tags)
    if tol:
        payload["tol"] = tol
    resp = _request(ctx.obj["server"], "POST", "/verify", json=payload)
    if resp.status_code == 404:
        click.echo(f"error: {resp.json()['detail']}", err=True)
        sys.exit(USAGE_ERROR)
    if resp.status_code >= 400:
        click.echo(f"error: {resp.json()['detail']}", err=True)
        sys.exit(USAGE_ERROR)
    report = resp.json()
    if fmt == "json":
        _emit(json.dumps(report, indent=2), out)
    else:
        lines = []
        for row in report["results"]:
            lines.append(
                f"{row['status']:<9} {row['id']:<34} eq {row['eq']:<12}"
                f" residual {row['residual']}  ({row['seconds']:.2f}s)"
            )
        s = report["summary"]
        lines.append(
            f"summary: {s['pass']} pass, {s['fail']} fail, "
            f"{s['advisory']} advisory at {report['run']['precision_bits']} bits"
        )
        _emit("\n".join(lines), out)
    return VERIFY_FAILURE if report["summary"]["fail"] else 0


@main.command("verify")
@click.argument("ids", nargs=-1)
@click.option("--all", "all_", is_flag=True, help="Verify the whole catalog.")
@click.option("--bits", type=int, default=_default_bits, show_default="128")
@click.option("--tol", default=None,
              help="Tolerance override (positive decimal string).")
@click.option("--tag", "tags", multiple=True, help="Filter by tag (repeatable).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
@click.option("--out", default=None, help="Write the report to a file.")
@click.option("--workers", type=int, default=1, show_default=True)
@click.pass_context
def verify_cmd(ctx, ids, all_, bits, tol, tags, fmt, out, workers):
    """Verify identities by id, by --tag, or the full catalog with --all."""
    sys.exit(_run_verify(ctx, ids, all_, bits, tol, tags, fmt, out, workers))


@main.command("report")
@click.option("--bits", type=int, default=_default_bits, show_default="128")
@click.option("--tag", "tags", multiple=True)
@click.option("--tol", default=None)
@click.option("--out", default=None, help="Report file (default stdout).")
@click.option("--workers", type=int, default=1, show_default=True)
@click.pass_context
def report_cmd(ctx, bits, tags, tol, out, workers):
    """Run the full verification sweep and emit the JSON report."""
    sys.exit(_run_verify(ctx, (), True, bits, tol, tags, "json", out, workers))


@main.command("list")
@click.option("--tag", "tags", multiple=True, help="Filter by tag (repeatable).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
@click.option("--out", default=None)
@click.pass_context
def list_cmd(ctx, tags, fmt, out):
    """List catalog identities: id, equation tag, kind, description."""
    server = ctx.obj["server"]
    if tags:
        rows = []
        seen = set()
        for tag in tags:
            page = _request(server, "GET", "/identities",
                            params={"tag": tag}).json()
            for row in page:
                if row["id"] not in seen:
                    seen.add(row["id"])
                    rows.append(row)
    else:
        rows = _request(server, "GET", "/identities").json()
    rows.sort(key=lambda r: r["id"])
    if fmt == "json":
        _emit(json.dumps(rows, indent=2), out)
    else:
        lines = [
            f"{r['id']:<34} eq {r['eq']:<12} {r['kind']:<15} {r['description']}"
            for r in rows
        ]
        _emit("\n".join(lines), out)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8321, show_default=True)
def serve_cmd(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()

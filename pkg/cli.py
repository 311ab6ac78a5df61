# cli.py
"""
Command-line surface. Every subcommand builds its parameters, runs them through the agent
pipeline and prints the response body as text (`board=... m=...` header, then `key: value`
lines) or canonical JSON.

Exit codes: 0 success or match, 1 verification mismatch or failing suite, 2 usage error.
"""

import logging
from typing import Any, Dict, List, Optional

import click

from agents.coral_utils import canonical_json
from agents.pipeline import Pipeline
from database.db_session import SessionLocal, init_db
from database.records import list_runs, record_scan, record_sweep
from settings import LOG_LEVEL, SWEEP_M_MAX, SWEEP_MAX_CELLS, SWEEP_N_MAX, SWEEP_WORKERS

logger = logging.getLogger("cli")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
EXPORT_FORMATS = ["csv", "xlsx", "json"]


def open_session():
    init_db()
    return SessionLocal()


def format_option(f):
    return click.option(
        "--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True, help="Output format."
    )(f)


def board_option(required: bool = True):
    return click.option("--board", "board", required=required, help='Board as comma-separated heights, e.g. "1,3,3".')


def m_option(f):
    return click.option("--m", "m", type=int, default=1, show_default=True, help="Level size m.")(f)


def parse_int_list(ctx, param, value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    return str(value)


def _lines(prefix: str, value: Any) -> List[str]:
    if isinstance(value, dict):
        out: List[str] = []
        for key in sorted(value):
            out.extend(_lines(f"{prefix}.{key}" if prefix else key, value[key]))
        return out
    if isinstance(value, list):
        if all(not isinstance(v, (list, dict)) for v in value):
            return [f"{prefix}: {','.join(_scalar(v) for v in value)}"]
        return [f"{prefix}: {canonical_json(value)}"]
    return [f"{prefix}: {_scalar(value)}"]


def header_for(params: Dict[str, Any]) -> str:
    if params.get("board") is not None:
        return f"board={params['board']} m={params.get('m', 1)}"
    keys = [k for k in ("n", "m", "max_cells", "m_max", "n_max") if params.get(k) is not None]
    return " ".join(f"{k}={params[k]}" for k in keys)


def emit(params: Dict[str, Any], body: Dict[str, Any], fmt: str) -> None:
    ctx = click.get_current_context()
    status = body.get("status")
    if status == "FAIL":
        if fmt == "json":
            click.echo(canonical_json(body))
        else:
            validation = body.get("validation") or {}
            click.echo(header_for(params))
            for err in validation.get("schema_errors", []):
                click.echo(f"error: {'.'.join(str(p) for p in err['path']) or '<params>'}: {err['message']}", err=True)
            for err in validation.get("rule_errors", []):
                click.echo(f"error: {err}", err=True)
            if body.get("error"):
                click.echo(f"error: {body['error']}", err=True)
        ctx.exit(EXIT_USAGE)

    if fmt == "json":
        click.echo(canonical_json(body))
    else:
        click.echo(header_for(params))
        for line in _lines("", {k: v for k, v in body.items() if k != "status"}):
            click.echo(line)
        click.echo(f"status: {status}")
    ctx.exit(EXIT_MISMATCH if status == "MISMATCH" else EXIT_OK)


def run(ctx: click.Context, command: str, params: Dict[str, Any], fmt: str) -> None:
    pipeline: Pipeline = ctx.obj
    emit(params, pipeline.run_command(command, params), fmt)


@click.group()
@click.option("--workers", type=int, default=SWEEP_WORKERS, show_default=True, help="Worker processes for sweeps.")
@click.pass_context
def cli(ctx: click.Context, workers: int):
    """m-level rook placements on Ferrers boards."""
    logging.basicConfig(level=LOG_LEVEL)
    ctx.obj = Pipeline(sender="cli", workers=workers)


@cli.command()
@board_option()
@m_option
@format_option
@click.pass_context
def analyze(ctx, board, m, fmt):
    """Zones, flags, level counts, r- and f-vectors of a board."""
    run(ctx, "analyze", {"board": board, "m": m}, fmt)


@cli.command()
@click.argument("theorem", type=click.Choice(["mft", "mwft", "pqmft"]))
@board_option()
@m_option
@click.option("--x-values", callback=parse_int_list, default=None, help="Comma-separated x values (numeric pqmft).")
@click.option("--symbolic", is_flag=True, help="Verify pqmft as a Laurent identity in P = p^x, Q = q^x.")
@click.option("--columns", type=int, default=None, help="Pad the board with leading zero columns to this many columns.")
@format_option
@click.pass_context
def verify(ctx, theorem, board, m, x_values, symbolic, columns, fmt):
    """Check a factorization theorem on a board."""
    params: Dict[str, Any] = {"theorem": theorem, "board": board, "m": m, "columns": columns}
    if symbolic:
        params["mode"] = "symbolic"
    elif x_values is not None:
        params["mode"] = "numeric"
        params["x_values"] = x_values
    run(ctx, "verify", params, fmt)


@cli.command()
@click.argument("kind", type=click.Choice(["level", "weight", "restricted-singleton"]))
@board_option()
@m_option
@format_option
@click.pass_context
def canon(ctx, kind, board, m, fmt):
    """Canonical representative of a board's equivalence class."""
    run(ctx, "canon", {"kind": kind, "board": board, "m": m}, fmt)


@cli.command(name="class")
@click.argument("what", type=click.Choice(["size", "list", "qgen"]))
@board_option()
@m_option
@click.option("--relation", type=click.Choice(["level", "weight"]), default=None)
@click.option("--n", "n", type=int, default=None, help="Triangle size for qgen (default: smallest that fits).")
@click.option("--check", is_flag=True, help="Cross-check against exhaustive enumeration.")
@format_option
@click.pass_context
def class_(ctx, what, board, m, relation, n, check, fmt):
    """Class sizes, members and dinv generating functions."""
    run(ctx, "class", {"what": what, "board": board, "m": m, "relation": relation, "n": n, "check": check}, fmt)


@cli.command()
@click.argument("what", type=click.Choice(["stats", "phi", "poly", "extremal"]))
@board_option(required=False)
@click.option("--n", "n", type=int, default=None)
@m_option
@format_option
@click.pass_context
def catalan(ctx, what, board, n, m, fmt):
    """area/dinv/bounce, the bounce bijection and q,t-Catalan polynomials."""
    run(ctx, "catalan", {"what": what, "board": board, "n": n, "m": m}, fmt)


def _export(ctx: click.Context, name: str, records: List[Dict[str, Any]], fmt: str, summary: Dict[str, Any]) -> Dict[str, Any]:
    pipeline: Pipeline = ctx.obj
    result = pipeline.export(name, records, fmt, summary)
    if result.get("status") != "PASS":
        logger.error("export failed: %s", result.get("error") or result.get("validation"))
    return result


@cli.command()
@click.argument("flavor", type=click.Choice(["classic", "mlevel", "pq", "scan"]))
@board_option(required=False)
@click.option("--n", "n", type=int, required=True)
@m_option
@click.option("--boards-max-cells", "max_cells", type=int, default=None, help="Scan every board with at most this many cells.")
@click.option("--singleton-only", is_flag=True)
@click.option("--p1", is_flag=True, help="Set p = 1 before looking for negative coefficients.")
@click.option("--check", is_flag=True, help="Cross-check against brute-force enumeration.")
@click.option("--record", is_flag=True, help="Store scan records in the database.")
@click.option("--export", "export_fmt", type=click.Choice(EXPORT_FORMATS), default=None)
@format_option
@click.pass_context
def hit(ctx, flavor, board, n, m, max_cells, singleton_only, p1, check, record, export_fmt, fmt):
    """Hit numbers (classical, m-level, p,q) and the positivity scan."""
    params: Dict[str, Any] = {
        "flavor": flavor,
        "board": board,
        "n": n,
        "m": m,
        "max_cells": max_cells,
        "singleton_only": singleton_only,
        "p1": p1,
        "check": check,
    }
    pipeline: Pipeline = ctx.obj
    body = pipeline.run_command("hit", params)
    if flavor == "scan" and body.get("status") == "PASS":
        records = body["records"]
        if record:
            try:
                db = open_session()
                try:
                    body["recorded"] = record_scan(db, records)
                finally:
                    db.close()
            except Exception:
                logger.exception("failed to record scan")
        if export_fmt:
            summary = {"n": n, "m": m, "specialize_p1": p1, "negative_boards": body["negative_boards"]}
            body["export"] = _export(ctx, f"scan_n{n}_m{m}", records, export_fmt, summary)
    emit(params, body, fmt)


@cli.command()
@click.option("--max-cells", type=int, default=SWEEP_MAX_CELLS, show_default=True)
@click.option("--m-max", type=int, default=SWEEP_M_MAX, show_default=True)
@click.option("--n-max", type=int, default=SWEEP_N_MAX, show_default=True)
@click.option("--suite", "suites", multiple=True, default=["all"], show_default=True, help="Suite name (repeatable) or 'all'.")
@click.option("--record", is_flag=True, help="Store the run in the database.")
@click.option("--export", "export_fmt", type=click.Choice(EXPORT_FORMATS), default=None)
@format_option
@click.pass_context
def sweep(ctx, max_cells, m_max, n_max, suites, record, export_fmt, fmt):
    """Run the invariant suites exhaustively within bounds."""
    params = {"max_cells": max_cells, "m_max": m_max, "n_max": n_max, "suites": list(suites)}
    pipeline: Pipeline = ctx.obj
    body = pipeline.run_command("sweep", params)
    if body.get("status") in ("PASS", "MISMATCH"):
        report = body["report"]
        if record:
            try:
                db = open_session()
                try:
                    body["run_id"] = record_sweep(db, report).id
                finally:
                    db.close()
            except Exception:
                logger.exception("failed to record sweep")
        if export_fmt:
            rows = [dict(s, failures="; ".join(s["failures"])) for s in report["suites"]]
            summary = {"max_cells": max_cells, "m_max": m_max, "n_max": n_max, "passed": report["passed"]}
            body["export"] = _export(ctx, f"sweep_c{max_cells}_m{m_max}_n{n_max}", rows, export_fmt, summary)
    if fmt == "text" and body.get("status") in ("PASS", "MISMATCH"):
        click.echo(header_for(params))
        for suite in body["report"]["suites"]:
            mark = "PASS" if suite["passed"] else "FAIL"
            click.echo(f"{mark} {suite['name']} checked={suite['checked']} failures={suite['failure_count']}")
            for witness in suite["failures"]:
                click.echo(f"    {witness}")
        if "run_id" in body:
            click.echo(f"run_id: {body['run_id']}")
        if "export" in body:
            click.echo(f"export: {_scalar(body['export'].get('file'))}")
        click.echo(f"status: {body['status']}")
        ctx.exit(EXIT_MISMATCH if body["status"] == "MISMATCH" else EXIT_OK)
    emit(params, body, fmt)


@cli.command()
@format_option
def runs(fmt):
    """List recorded sweep runs."""
    db = open_session()
    try:
        rows = list_runs(db)
    finally:
        db.close()
    if fmt == "json":
        click.echo(canonical_json({"runs": rows}))
        return
    for row in rows:
        mark = "PASS" if row["passed"] else "FAIL"
        click.echo(
            f"{row['id']} {mark} max_cells={row['max_cells']} m_max={row['m_max']} n_max={row['n_max']} "
            f"suites={len(row['suites'])} at={row['created_at']}"
        )


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Start the HTTP gateway."""
    import uvicorn

    uvicorn.run("api.gateway:app", host=host, port=port)


if __name__ == "__main__":
    cli()

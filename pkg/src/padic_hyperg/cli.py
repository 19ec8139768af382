"""Command-line frontend: sweeps, direct evaluation, counting, Gauss-sum checks.

Exit codes: 0 success, 1 identity failures found, 2 usage error, 3 I/O
error, 4 domain error (e.g. singular curve).  The cache directory defaults
to ./.pgam-cache and can be overridden with --cache-dir or the
PADIC_HYPER_CACHE environment variable.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from fractions import Fraction

import click

from .characters import CharExp
from .curves import (SingularCurveError, count_dik, count_hessian,
                     count_jacobi, count_weierstrass)
from .eisenstein import (EIS_MAX_P, gross_koblitz_check,
                         hasse_davenport_check)
from .hyperg import HyperParams, nGn
from .padics import PadicContext
from .report import SweepReport
from .verify import SWEEP_IDS, sweep

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_DOMAIN = 4


def _cache_dir(opt: str | None, no_cache: bool) -> str | None:
    if no_cache:
        return None
    if opt:
        return opt
    return os.environ.get("PADIC_HYPER_CACHE", "./.pgam-cache")


def _report_json(reports: list[SweepReport]) -> str:
    body = [r.to_dict() for r in reports]
    return json.dumps(body[0] if len(body) == 1 else body,
                      indent=2, sort_keys=False) + "\n"


def _report_csv(reports: list[SweepReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["identity", "p", "params", "lhs", "rhs",
                     "equal", "precision", "skip"])
    for r in reports:
        for v in r.verdicts:
            d = v.to_dict()
            writer.writerow([r.identity_id, d["p"],
                             json.dumps(d["params"], sort_keys=True),
                             d["lhs"], d["rhs"], d["equal"],
                             d["precision"], d["skip"] or ""])
    return buf.getvalue()


def _write_out(path: str | None, text: str) -> None:
    if path is None:
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise click.ClickException(f"cannot write report: {exc}") from exc


@click.group()
def main() -> None:
    """Exact p-adic hypergeometric identity verification."""


@main.command()
@click.option("--id", "identity_id", required=True,
              help="Identity id (one of %s) or 'all'." % ", ".join(SWEEP_IDS))
@click.option("--p-min", default=5, show_default=True, type=int)
@click.option("--p-max", default=47, show_default=True, type=int)
@click.option("--precision", "n_prec", default=3, show_default=True, type=int)
@click.option("--infinity", default="calibrate", show_default=True,
              help="Jacobi-quartic infinity convention: 0, 1, 2 or 'calibrate'.")
@click.option("--out", "out_path", default=None, type=click.Path())
@click.option("--format", "fmt", default="json", show_default=True,
              type=click.Choice(["json", "csv"]))
@click.option("--jobs", default=1, show_default=True, type=int)
@click.option("--cache-dir", default=None, type=click.Path())
@click.option("--no-cache", is_flag=True, default=False)
def verify(identity_id, p_min, p_max, n_prec, infinity, out_path, fmt,
           jobs, cache_dir, no_cache):
    """Sweep one identity (or all) over a prime range and report verdicts."""
    ids = list(SWEEP_IDS) if identity_id == "all" else [identity_id]
    for i in ids:
        if i not in SWEEP_IDS:
            click.echo(f"unknown identity id {i!r}", err=True)
            sys.exit(EXIT_USAGE)
    if p_min < 5 or p_max < p_min or n_prec < 2:
        click.echo("need p_min >= 5, p_max >= p_min, precision >= 2", err=True)
        sys.exit(EXIT_USAGE)
    if infinity != "calibrate":
        try:
            infinity = int(infinity)
        except ValueError:
            click.echo("--infinity must be 0, 1, 2 or 'calibrate'", err=True)
            sys.exit(EXIT_USAGE)
        if infinity not in (0, 1, 2):
            click.echo("--infinity must be 0, 1, 2 or 'calibrate'", err=True)
            sys.exit(EXIT_USAGE)
    cache = _cache_dir(cache_dir, no_cache)
    reports = [sweep(i, p_min, p_max, n_prec, cache, infinity, jobs)
               for i in ids]
    text = _report_json(reports) if fmt == "json" else _report_csv(reports)
    _write_out(out_path, text)
    failures = 0
    click.echo(f"{'identity':<22} {'primes':>8} {'checked':>8} "
               f"{'passed':>8} {'failed':>8} {'skipped':>8}")
    for r in reports:
        nprimes = len({v.p for v in r.verdicts})
        click.echo(f"{r.identity_id:<22} {nprimes:>8} {r.checked:>8} "
                   f"{r.passed:>8} {r.failed:>8} {r.skipped:>8}")
        if "infinity_convention" in r.environment:
            click.echo(f"  infinity_convention = "
                       f"{r.environment['infinity_convention']} "
                       f"({r.environment['infinity_policy']})")
        failures += r.failed
    if failures:
        click.echo(f"FAILURES: {failures}", err=True)
        sys.exit(EXIT_FAILURES)
    sys.exit(EXIT_OK)


def _parse_fractions(text: str, p: int) -> tuple:
    vals = []
    for part in text.split(","):
        f = Fraction(part.strip())
        if f.denominator % p == 0:
            raise click.ClickException(
                f"parameter {part.strip()} has denominator divisible by {p}")
        vals.append(f)
    return tuple(vals)


@main.command()
@click.option("--p", "p", required=True, type=int)
@click.option("--precision", "n_prec", default=3, show_default=True, type=int)
@click.option("--top", required=True, help="Comma-separated fractions, e.g. 1/4,3/4")
@click.option("--bot", required=True, help="Comma-separated fractions, e.g. 1/3,2/3")
@click.option("--t", "t", required=True, type=int)
@click.option("--cache-dir", default=None, type=click.Path())
@click.option("--no-cache", is_flag=True, default=False)
def gfun(p, n_prec, top, bot, t, cache_dir, no_cache):
    """Evaluate the hypergeometric sum directly and print the value."""
    try:
        top_f = _parse_fractions(top, p)
        bot_f = _parse_fractions(bot, p)
        params = HyperParams(top_f, bot_f, t)
    except (ValueError, ZeroDivisionError, click.ClickException) as exc:
        click.echo(f"bad parameters: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    ctx = PadicContext(p, n_prec, _cache_dir(cache_dir, no_cache))
    gv = nGn(params, ctx)
    click.echo(repr(gv.value))
    sys.exit(EXIT_OK)


@main.command()
@click.option("--family", required=True,
              type=click.Choice(["dik", "jacobi", "hessian", "weierstrass"]))
@click.option("--p", "p", required=True, type=int)
@click.option("--lam", "--lambda", "lam", default=None, type=int,
              help="Parameter for dik/jacobi families.")
@click.option("--d", "d", default=None, type=int,
              help="Parameter for the hessian family.")
@click.option("--a2", default=0, type=int)
@click.option("--a4", default=0, type=int)
@click.option("--a6", default=0, type=int)
@click.option("--infinity", default=1, show_default=True, type=int,
              help="Jacobi-quartic infinity convention (0, 1 or 2).")
def count(family, p, lam, d, a2, a4, a6, infinity):
    """Count points on one curve and print total/infinity/trace."""
    try:
        if family == "dik":
            if lam is None:
                raise click.UsageError("--lam required for family dik")
            res = count_dik(lam, p)
        elif family == "jacobi":
            if lam is None:
                raise click.UsageError("--lam required for family jacobi")
            res = count_jacobi(lam, p, infinity)
        elif family == "hessian":
            if d is None:
                raise click.UsageError("--d required for family hessian")
            res = count_hessian(d, p)
        else:
            res = count_weierstrass(a2, a4, a6, p)
    except SingularCurveError as exc:
        click.echo(f"singular curve: {exc}", err=True)
        sys.exit(EXIT_DOMAIN)
    click.echo(f"family={family} p={p} total={res.total_points} "
               f"infinity={res.infinity_points} trace={res.trace} "
               f"convention={res.convention}")
    sys.exit(EXIT_OK)


@main.command()
@click.option("--p", "p", required=True, type=int)
@click.option("--precision", "n_prec", default=3, show_default=True, type=int)
@click.option("--cache-dir", default=None, type=click.Path())
@click.option("--no-cache", is_flag=True, default=False)
def gauss(p, n_prec, cache_dir, no_cache):
    """Gross-Koblitz for every character and the Hasse-Davenport matrix."""
    if p > EIS_MAX_P:
        click.echo(f"p={p} exceeds the Eisenstein-ring cap {EIS_MAX_P}",
                   err=True)
        sys.exit(EXIT_DOMAIN)
    ctx = PadicContext(p, n_prec, _cache_dir(cache_dir, no_cache))
    failed = 0
    for j in range(p - 1):
        v = gross_koblitz_check(j, ctx)
        mark = "ok" if v.equal else "FAIL"
        click.echo(f"gross-koblitz j={j:<3} {mark}")
        failed += 0 if v.equal else 1
    for m in range(2, p):
        if (p - 1) % m:
            continue
        chi = CharExp((p - 1) // m, p - 1)
        for jm in range(p - 1):
            v = hasse_davenport_check(chi, CharExp(jm, p - 1), ctx)
            mark = "ok" if v.equal else "FAIL"
            click.echo(f"hasse-davenport m={m} psi={jm:<3} {mark}")
            failed += 0 if v.equal else 1
    if failed:
        click.echo(f"FAILURES: {failed}", err=True)
        sys.exit(EXIT_FAILURES)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()

"""Command-line interface.

    splinenorm norms --max-n 20 --format csv --out norms.csv
    splinenorm verify --max-n 50 --max-k 500
    splinenorm oracle --n 8 --grid 2048 --tol 1e-8
    splinenorm gram --n 4 --inverse

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction

import click

from .checks import run_all
from .gram import GramSpec, InverseGramClosedForm, gram_matrix
from .lebesgue import norm
from .numbers import format_rational
from .oracle import oracle_norm
from .sequences import table

__all__ = ["main", "norm_records", "format_float"]

CSV_FIELDS = ["n", "norm_exact", "norm_float", "argmax_k", "gap_float"]
ORACLE_FIELDS = ["oracle_value", "oracle_dev"]


def format_float(x: float) -> str:
    return format(x, ".17g")


def norm_records(max_n: int, with_oracle: bool = False) -> list[dict]:
    records = []
    for n in range(1, max_n + 1):
        rep = norm(n)
        gap = rep.gap
        rec = {
            "n": n,
            "norm_exact": format_rational(rep.norm_exact),
            "norm_float": rep.norm_float,
            "argmax_k": ",".join(map(str, rep.argmax_indices)),
            "gap_float": gap.numerator / gap.denominator,
        }
        if with_oracle:
            o = oracle_norm(n, 256 * n, compare=False)
            rec["oracle_value"] = o.norm_estimate
            rec["oracle_dev"] = abs(o.norm_estimate - rep.norm_float)
        records.append(rec)
    return records


def _render_csv(records: list[dict], with_oracle: bool) -> str:
    fields = CSV_FIELDS + (ORACLE_FIELDS if with_oracle else [])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for rec in records:
        writer.writerow([format_float(v) if isinstance(v, float) else v
                         for v in (rec[f] for f in fields)])
    return buf.getvalue()


@click.group()
def main():
    """Exact Lebesgue constants of L2 projections onto uniform linear splines."""


@main.command()
@click.option("--max-n", type=click.IntRange(min=1), required=True)
@click.option("--with-oracle", is_flag=True, help="Add the floating-point brute-force value.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Output file (default stdout).")
def norms(max_n, with_oracle, fmt, out):
    """Table of exact norms for n = 1..MAX_N."""
    records = norm_records(max_n, with_oracle)
    if fmt == "csv":
        text = _render_csv(records, with_oracle)
    else:
        text = json.dumps(records, indent=2) + "\n"
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc.strerror}", err=True)
        sys.exit(1)


def _parse_gram_fault(text: str | None):
    if text is None:
        return None
    try:
        i, j, delta = text.split(":")
        return int(i), int(j), Fraction(delta)
    except ValueError:
        raise click.BadParameter("expected I:J:DELTA", param_hint="--corrupt-gram")


@main.command()
@click.option("--max-n", type=click.IntRange(min=1), required=True)
@click.option("--max-k", type=click.IntRange(min=1), default=500, show_default=True,
              help="Upper index for the sequence identities.")
@click.option("--corrupt-a", type=click.IntRange(min=0), default=None, hidden=True)
@click.option("--corrupt-gram", default=None, hidden=True)
def verify(max_n, max_k, corrupt_a, corrupt_gram):
    """Run every identity, inequality and theorem check."""
    A = None
    if corrupt_a is not None:
        A = list(table(max(max_k + 2, corrupt_a))[0])
        A[corrupt_a] += 1
    reports = run_all(max_n, max_k, A=A, gram_fault=_parse_gram_fault(corrupt_gram))
    click.echo(f"{'check':<28} {'range':<22} passed")
    for rep in reports:
        click.echo(rep.summary_line())
    failed = [r for r in reports if not r.passed]
    for rep in failed:
        click.echo(f"\n{rep.name}: {len(rep.failures)} failure(s)", err=True)
        for f in rep.failures[:10]:
            click.echo(f"  {f.describe()}", err=True)
    sys.exit(1 if failed else 0)


@main.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--grid", type=click.IntRange(min=1), required=True)
@click.option("--tol", type=click.FloatRange(min=0, min_open=True), default=1e-8, show_default=True)
def oracle(n, grid, tol):
    """Brute-force floating-point norm compared with the exact one."""
    if grid < 8 * n:
        raise click.BadParameter(f"must be at least 8*n = {8 * n}", param_hint="--grid")
    res = oracle_norm(n, grid)
    for name in ("n", "norm_estimate", "argmax_x", "knot_max", "grid_size",
                 "gram_defect", "exact_norm", "deviation"):
        value = getattr(res, name)
        click.echo(f"{name}: {format_float(value) if isinstance(value, float) else value}")
    ok = res.deviation <= tol
    click.echo(f"within tolerance {tol:g}: {'yes' if ok else 'no'}")
    sys.exit(0 if ok else 1)


@main.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--inverse", is_flag=True, help="Dump the closed-form inverse instead.")
@click.option("--format", "fmt", type=click.Choice(["csv"]), default="csv")
def gram(n, inverse, fmt):
    """Exact Gram matrix (or its inverse) as CSV of p/q strings."""
    spec = GramSpec(n)
    rows = InverseGramClosedForm(spec).dense if inverse else gram_matrix(spec).dense()
    writer = csv.writer(sys.stdout, lineterminator="\n")
    for row in rows:
        writer.writerow(format_rational(v) for v in row)


if __name__ == "__main__":
    main()

"""Command line front end.

Every subcommand emits either CSV or JSON (``--format``); floats are
printed with %.17g so a round trip through text preserves the double,
and exact rationals are printed as ``numerator/denominator``.  JSON
documents carry a ``schema_version`` field.  Exit status: 0 on success,
1 when a verification suite fails, 2 on usage errors.

Environment: FIBLAT_THREADS and FIBLAT_PRECISION_BITS provide defaults
for the matching options; explicit flags win.
"""

from __future__ import annotations

import csv
import io
import json
import math

import click

from .asymptotics import constant_C, constant_C_closed, constant_D, residual_fit
from .dedekind import (
    cos2sin4_closed,
    s13_closed,
    s22_closed,
    sigma2_closed,
    sigma4_closed,
    sigma6_closed,
    sin4_closed,
)
from .energy import RationalLattice, energy, fib_sum, fib_sum_grouped
from .golden import fib
from .kernels import KERNEL_GRAMMAR, parse_kernel
from .verify import SUITE_NAMES, run_suite
from .wythoff import dual_slot, row, wythoff_row_entries

SCHEMA_VERSION = 1

_EPS = 2.0 ** -52


def _f(x) -> str:
    return format(float(x), ".17g")


def _frac(q) -> str:
    return f"{q.numerator}/{q.denominator}"


def _echo_json(doc) -> None:
    click.echo(json.dumps(doc, indent=2))


def _echo_csv(header, rows) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    click.echo(buf.getvalue(), nl=False)


def _at_least(minimum: int):
    def cb(ctx, param, value):
        if value is not None and value < minimum:
            raise click.BadParameter(f"must be >= {minimum}, got {value}")
        return value

    return cb


def _format_option(default: str):
    return click.option(
        "--format", "fmt", type=click.Choice(["csv", "json"]), default=default,
        show_default=True, help="output format",
    )


_threads_option = click.option(
    "--threads", type=int, default=None, envvar="FIBLAT_THREADS",
    callback=_at_least(1),
    help="worker threads for the row sweep [env FIBLAT_THREADS]",
)

_precision_option = click.option(
    "--precision-bits", type=int, default=None, envvar="FIBLAT_PRECISION_BITS",
    callback=_at_least(53),
    help="working precision floor in bits [env FIBLAT_PRECISION_BITS]",
)


def _kernel_arg(spec: str, sigma: float):
    try:
        return parse_kernel(spec, sigma=sigma)
    except ValueError as exc:
        msg = str(exc)
        if "grammar" not in msg:
            msg = f"{msg} (kernel grammar: {KERNEL_GRAMMAR})"
        raise click.UsageError(msg) from exc


@click.group()
def main():
    """Fibonacci lattice energies, golden-ratio combinatorics and the
    closed forms behind them."""


@main.command("wythoff")
@click.option("--rows", type=int, default=8, show_default=True,
              callback=_at_least(1), help="number of rows to print")
@click.option("--cols", type=int, default=6, show_default=True,
              callback=_at_least(1), help="entries per row")
@click.option("--dual", is_flag=True,
              help="dual array; row i starts at slot mu_i + 1")
@_format_option("csv")
def cmd_wythoff(rows, cols, dual, fmt):
    """Print the row array (or its dual) with the row invariants."""
    if dual:
        out = []
        for i in range(1, rows + 1):
            mu = row(i).mu
            out.append((i, mu, [dual_slot(i, mu + j) for j in range(1, cols + 1)]))
        if fmt == "json":
            _echo_json({
                "schema_version": SCHEMA_VERSION,
                "table": "dual",
                "rows": [{"i": i, "mu": mu, "entries": e} for i, mu, e in out],
            })
        else:
            header = ["i", "mu"] + [f"Wd{j}" for j in range(1, cols + 1)]
            _echo_csv(header, [[i, mu, *e] for i, mu, e in out])
        return
    out = [(i, row(i).eta, wythoff_row_entries(i, cols)) for i in range(1, rows + 1)]
    if fmt == "json":
        _echo_json({
            "schema_version": SCHEMA_VERSION,
            "table": "primal",
            "rows": [{"i": i, "eta": eta, "entries": e} for i, eta, e in out],
        })
    else:
        header = ["i", "eta"] + [f"W{j}" for j in range(1, cols + 1)]
        _echo_csv(header, [[i, eta, *e] for i, eta, e in out])


@main.command("sum")
@click.option("--level", "-n", type=int, required=True, help="lattice level n")
@click.option("--sigma", type=float, required=True, help="sine exponent")
@click.option("--kernel", "kernel_spec", default="one", show_default=True,
              help=f"weight: {KERNEL_GRAMMAR}")
@click.option("--method", type=click.Choice(["flat", "grouped"]), default="flat",
              show_default=True, help="plain m-sweep or row-grouped rearrangement")
@click.option("--raw", is_flag=True, help="skip the 1/F_n^sigma normalization")
@_format_option("json")
def cmd_sum(level, sigma, kernel_spec, method, raw, fmt):
    """The level-n lattice sum for one weight and exponent."""
    kernel = _kernel_arg(kernel_spec, sigma)
    normalized = not raw
    try:
        if method == "flat":
            value = fib_sum(level, sigma, kernel, normalized=normalized)
        else:
            value = fib_sum_grouped(level, sigma, kernel, normalized=normalized)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    modulus = fib(level)
    terms = max(modulus - 1, 0)
    cross = None
    if modulus <= 50000:
        other = (fib_sum_grouped if method == "flat" else fib_sum)(
            level, sigma, kernel, normalized=normalized
        )
        cross = abs(value - other)
    # pairwise reduction loses at most ~eps per doubling level
    roundoff = _EPS * max(1, math.ceil(math.log2(max(terms, 2)))) * abs(value)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "level": level,
        "modulus": modulus,
        "sigma": sigma,
        "kernel": kernel.name,
        "method": method,
        "normalized": normalized,
        "terms": terms,
        "value": value,
        "cross_check_diff": cross,
        "roundoff_scale": roundoff,
    }
    if fmt == "json":
        _echo_json(doc)
    else:
        keys = list(doc)[1:]
        _echo_csv(keys, [[doc[k] if not isinstance(doc[k], float) else _f(doc[k])
                          for k in keys]])


@main.command("energy")
@click.option("--points", "-N", type=int, default=None, help="lattice size N")
@click.option("--gen", type=int, default=None, help="generator h, coprime to N")
@click.option("--fib-level", type=int, default=None,
              help="level n shortcut for N = F_n, h = F_{n-1}")
@click.option("--sigma", type=float, required=True, help="potential exponent")
@click.option("--p", type=float, default=1.0, show_default=True,
              help="potential coefficient")
@click.option("--method", type=click.Choice(["direct", "dft", "wce"]),
              default="dft", show_default=True)
@_format_option("json")
def cmd_energy(points, gen, fib_level, sigma, p, method, fmt):
    """Pair energy of a rational lattice under the product potential."""
    if fib_level is not None and (points is not None or gen is not None):
        raise click.UsageError("--fib-level conflicts with --points/--gen")
    try:
        if fib_level is not None:
            lat = RationalLattice.fibonacci(fib_level)
        elif points is not None and gen is not None:
            lat = RationalLattice(points, gen)
        else:
            raise click.UsageError("need --points and --gen, or --fib-level")
        rep = energy(lat, sigma, p, method)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    doc = {
        "schema_version": SCHEMA_VERSION,
        "N": rep.N,
        "h": rep.h,
        "sigma": rep.sigma,
        "p": rep.p,
        "method": rep.method,
        "value": rep.value,
    }
    if fmt == "json":
        _echo_json(doc)
    else:
        keys = list(doc)[1:]
        _echo_csv(keys, [[doc[k] if not isinstance(doc[k], float) else _f(doc[k])
                          for k in keys]])


@main.command("constants")
@click.option("--sigma", type=float, required=True, help="exponent, > 1")
@click.option("--kernel", "kernel_spec", default="one", show_default=True,
              help=f"weight: {KERNEL_GRAMMAR}")
@click.option("--i-max", type=int, default=100000, show_default=True,
              callback=_at_least(8), help="rows kept in both series")
@click.option("--k-max", type=int, default=64, show_default=True,
              callback=_at_least(2), help="inner terms per row")
@_threads_option
@_precision_option
@_format_option("json")
def cmd_constants(sigma, kernel_spec, i_max, k_max, threads, precision_bits, fmt):
    """Slope and intercept of the large-level growth law, with the tail
    and rounding bounds produced alongside them."""
    kernel = _kernel_arg(kernel_spec, sigma)
    try:
        c = constant_C(sigma, kernel, i_max, prec=precision_bits)
        d = constant_D(sigma, kernel, i_max, k_max, threads=threads)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    doc = {
        "schema_version": SCHEMA_VERSION,
        "sigma": sigma,
        "kernel": kernel.name,
        "i_max": i_max,
        "k_max": k_max,
        "threads": threads or 1,
        "c": c.value,
        "c_tail_bound": c.tail_bound,
        "c_precision_bits": c.prec,
        "d": d.value,
        "d_inner_tail": d.inner_tail,
        "d_outer_tail": d.outer_tail,
        "d_precision_gap": d.precision_gap,
        "d_error_estimate": d.error_estimate,
    }
    f0 = kernel.value_at_zero
    if sigma == int(sigma) and int(sigma) % 2 == 0 and float(f0).is_integer():
        closed = constant_C_closed(int(sigma), int(f0))
        doc["c_closed"] = closed.value
        doc["c_closed_coefficient"] = _frac(closed.coefficient)
    if fmt == "json":
        _echo_json(doc)
    else:
        keys = list(doc)[1:]
        _echo_csv(keys, [[doc[k] if not isinstance(doc[k], float) else _f(doc[k])
                          for k in keys]])


_FAMILIES = {
    "s22": s22_closed,
    "s13": s13_closed,
    "sigma2": sigma2_closed,
    "sigma4": sigma4_closed,
    "sigma6": sigma6_closed,
    "sin4": sin4_closed,
    "cos2sin4": cos2sin4_closed,
}


@main.command("closed")
@click.option("--family", type=click.Choice([*_FAMILIES, "c"]), required=True,
              help="which closed form")
@click.option("--n-min", type=int, default=3, show_default=True,
              callback=_at_least(2))
@click.option("--n-max", type=int, default=20, show_default=True,
              callback=_at_least(2))
@click.option("--sigma", type=int, default=None,
              help="even exponent (family c only)")
@_format_option("csv")
def cmd_closed(family, n_min, n_max, sigma, fmt):
    """Exact rational closed forms, one value per level."""
    if family == "c":
        if sigma is None:
            raise click.UsageError("family c needs --sigma")
        try:
            closed = constant_C_closed(sigma)
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc
        if fmt == "json":
            _echo_json({
                "schema_version": SCHEMA_VERSION,
                "family": "c",
                "sigma": sigma,
                "coefficient": _frac(closed.coefficient),
                "value": closed.value,
            })
        else:
            _echo_csv(["sigma", "coefficient", "value"],
                      [[sigma, _frac(closed.coefficient), _f(closed.value)]])
        return
    if n_max < n_min:
        raise click.UsageError(f"empty level range {n_min}..{n_max}")
    fn = _FAMILIES[family]
    try:
        table = [(n, fn(n)) for n in range(n_min, n_max + 1)]
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    if fmt == "json":
        _echo_json({
            "schema_version": SCHEMA_VERSION,
            "family": family,
            "rows": [{"n": n, "value": _frac(q)} for n, q in table],
        })
    else:
        _echo_csv(["n", "value"], [[n, _frac(q)] for n, q in table])


@main.command("verify")
@click.option("--suite", "suites", multiple=True, type=click.Choice(SUITE_NAMES),
              help="suite to run (repeatable; default: all)")
@click.option("--limit", type=int, default=None, callback=_at_least(1),
              help="override every selected suite's sweep size")
@_format_option("json")
@click.pass_context
def cmd_verify(ctx, suites, limit, fmt):
    """Run identity suites; exit 1 if any check fails."""
    names = list(suites) if suites else list(SUITE_NAMES)
    results = [run_suite(n, limit) for n in names]
    ok = all(r.passed for r in results)
    if fmt == "json":
        _echo_json({
            "schema_version": SCHEMA_VERSION,
            "passed": ok,
            "suites": [
                {**r.as_dict(), "seconds": round(r.seconds, 3)} for r in results
            ],
        })
    else:
        _echo_csv(
            ["suite", "passed", "checks", "limit", "seconds", "counterexample"],
            [[r.suite, str(r.passed).lower(), r.checks, r.limit,
              f"{r.seconds:.3f}", r.counterexample or ""] for r in results],
        )
    if not ok:
        ctx.exit(1)


@main.command("fit")
@click.option("--sigma", type=float, required=True, help="exponent, > 1")
@click.option("--kernel", "kernel_spec", default="one", show_default=True,
              help=f"weight: {KERNEL_GRAMMAR}")
@click.option("--n-min", type=int, default=10, show_default=True)
@click.option("--n-max", type=int, default=25, show_default=True)
@click.option("--i-max", type=int, default=100000, show_default=True,
              callback=_at_least(8))
@click.option("--k-max", type=int, default=64, show_default=True,
              callback=_at_least(2))
@click.option("--c", "c_override", type=float, default=None,
              help="slope to subtract (default: computed)")
@click.option("--d", "d_override", type=float, default=None,
              help="intercept to subtract (default: computed)")
@_threads_option
@_format_option("csv")
def cmd_fit(sigma, kernel_spec, n_min, n_max, i_max, k_max, c_override,
            d_override, threads, fmt):
    """Level sums against the fitted growth line; the last column is the
    residual rescaled by the claimed decay rate."""
    kernel = _kernel_arg(kernel_spec, sigma)
    try:
        table = residual_fit(sigma, kernel, n_min, n_max, c=c_override,
                             d=d_override, i_max=i_max, k_max=k_max,
                             threads=threads)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    if fmt == "json":
        _echo_json({
            "schema_version": SCHEMA_VERSION,
            "sigma": sigma,
            "kernel": kernel.name,
            "rows": [
                {"n": r.n, "sum": r.total, "asymptote": r.asymptote,
                 "residual": r.residual, "scaled_residual": r.scaled_residual}
                for r in table
            ],
        })
    else:
        _echo_csv(
            ["n", "sum", "asymptote", "residual", "scaled_residual"],
            [[r.n, _f(r.total), _f(r.asymptote), _f(r.residual),
              _f(r.scaled_residual)] for r in table],
        )


if __name__ == "__main__":
    main()

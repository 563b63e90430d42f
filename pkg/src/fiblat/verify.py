"""Batch identity checks behind the ``verify`` subcommand.

Each suite sweeps one family of relations the rest of the package rests
on and reports the first counterexample when a check fails.  Integer and
rational checks are exact; the handful of grid-based analytic bounds
allow a relative slack of 1e-15 for float rounding and nothing else.

Suites:

    wythoff      row array partitions the positive integers; successor
                 floor rule; alternating invariant identity; threshold
                 index vs half-Fibonacci cutoff; exact half witnesses
    dual         dual array bracketing by Fibonacci numbers; signed
                 two-term form vs closed form; modular pairing with the
                 primal array
    floor        golden-ratio floor identities on an integer range
    ineq         golden-ratio floor inequalities (exact, denominators
                 cleared) and sine/power calculus bounds on grids
    reciprocity  two reciprocity laws for the generalized sums, on
                 seeded random coprime pairs and consecutive Fibonacci
                 pairs
    closedform   closed forms of the generalized sums against their
                 defining sums, parity relation, trigonometric bridge
    dft          coefficient-table routes agree; exact coefficient sums
                 match the potential at zero
    zeta-routes  the three number-field zeta routes agree within their
                 certified errors
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .asymptotics import ZETA_ROUTES, dedekind_zeta
from .dedekind import (
    apostol_check,
    gen_dedekind_sum,
    hwz_check,
    s13_closed,
    s22_closed,
    s22_from_trig_sum,
    sigma2_closed,
    sigma2_closed_abstract,
)
from .golden import GoldenInt, fib, golden_compare
from .kernels import dft_coeff_sum_exact, dft_coeffs, dft_coeffs_even, potential_K
from .wythoff import (
    dual_entry,
    dual_slot,
    floor_phi_plus_inv,
    floor_phi_times,
    half_fib_witness,
    row,
    rows_below_half_fib,
    wythoff_row_entries,
)

_GRID_SLACK = 1e-15


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    passed: bool
    checks: int
    limit: int
    seconds: float
    counterexample: str | None = None

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": self.checks,
            "limit": self.limit,
            "seconds": self.seconds,
            "counterexample": self.counterexample,
        }


class _Counterexample(Exception):
    pass


class _Run:
    """Check counter; raises on the first failed relation."""

    __slots__ = ("checks",)

    def __init__(self):
        self.checks = 0

    def ok(self, cond: bool, label: str, *args) -> None:
        self.checks += 1
        if not cond:
            raise _Counterexample(label % args if args else label)


def _suite_wythoff(run: _Run, limit: int) -> None:
    # Every row entry at most `limit`, generated row by row.  The union
    # must be exactly 1..limit, each value once.
    seen: list[int] = []
    i = 1
    while True:
        L = floor_phi_times(i)
        start = L + i - 1
        if start > limit:
            break
        eta = L * L - (i - 1) * (i - 1 + L)
        prev, cur, k = L, start, 1
        while cur <= limit:
            seen.append(cur)
            run.ok(
                floor_phi_plus_inv(cur) == prev + cur,
                "successor rule fails at row %d entry %d (value %d)", i, k, cur,
            )
            sq = cur * cur - cur * prev - prev * prev
            run.ok(
                (sq if k % 2 == 0 else -sq) == eta,
                "alternating invariant fails at row %d entry %d", i, k,
            )
            prev, cur, k = cur, prev + cur, k + 1
        i += 1
    seen.sort()
    run.ok(len(seen) == limit, "array covers %d of %d integers", len(seen), limit)
    for pos, val in enumerate(seen, start=1):
        run.ok(val == pos, "partition breaks at %d (got %d)", pos, val)

    # Threshold index: an entry is below half the level-n modulus
    # exactly when its slot depth n - k stays above the row threshold.
    f40 = fib(40)
    for i in range(1, min(limit, 200) + 1):
        mu = row(i).mu
        L = floor_phi_times(i)
        ws = []
        prev, cur = L, L + i - 1
        while 2 * cur <= f40:
            ws.append(cur)
            prev, cur = cur, prev + cur
        for n in range(2, 41):
            fn = fib(n)
            want = max(0, n - mu - 1)
            got = 0
            for w in ws:
                if 2 * w >= fn:
                    break
                got += 1
            run.ok(
                got == want,
                "threshold mismatch at row %d level %d: depth %d vs %d",
                i, n, got, want,
            )

    # Exact equality with half the modulus does occur, on a sparse
    # family of rows; the witness constructor re-derives each one.
    for ell in range(1, 9):
        i, k, n = half_fib_witness(ell)
        run.ok(
            2 * wythoff_row_entries(i, k)[-1] == fib(n),
            "half witness %d fails", ell,
        )


def _suite_dual(run: _Run, limit: int) -> None:
    # Bracketing: the slot-m dual entry sits in [F_{m-2}, F_m).
    for i in range(1, limit + 1):
        mu = row(i).mu
        for m in range(mu + 1, mu + 41):
            wd = dual_slot(i, m)
            run.ok(
                fib(m - 2) <= wd < fib(m),
                "dual entry out of bracket at row %d slot %d: %d", i, m, wd,
            )

    # Signed two-term combination telescopes to the closed form.
    for i in range(1, min(limit, 60) + 1):
        mu = row(i).mu
        for n in range(mu + 2, 41):
            for k in range(1, n - mu):
                run.ok(
                    dual_entry(i, n, k) == dual_slot(i, n - k),
                    "dual forms disagree at row %d level %d depth %d", i, n, k,
                )

    # Modular pairing: multiplying a primal entry by F_{n-1} mod F_n
    # gives the dual entry up to reflection (the residue or its
    # complement; both sit under the same sine).
    for n in range(5, 27):
        fn, fn1 = fib(n), fib(n - 1)
        for i, k_max in rows_below_half_fib(n):
            for k, w in enumerate(wythoff_row_entries(i, k_max), start=1):
                r = (w * fn1) % fn
                wd = dual_slot(i, n - k)
                run.ok(
                    wd == r or wd == fn - r,
                    "pairing fails at level %d row %d depth %d", n, i, k,
                )


def _suite_floor(run: _Run, limit: int) -> None:
    phi = GoldenInt(0, 1)
    for n in range(1, limit + 1):
        L = floor_phi_times(n)
        m2 = n + L  # floor(phi^2 n), since phi^2 = phi + 1
        run.ok(
            golden_compare(phi * L, GoldenInt(m2, 0)) < 0,
            "floor product bound fails at %d", n,
        )
        run.ok(
            floor_phi_plus_inv(L) == m2,
            "double floor identity fails at %d", n,
        )
        s = floor_phi_plus_inv(n)
        run.ok(
            floor_phi_plus_inv(s) == n + s,
            "shifted floor identity fails at %d", n,
        )
        lo = floor_phi_plus_inv(2 * n - 1)
        hi = floor_phi_plus_inv(2 * n + 1)
        run.ok(
            lo < 2 * s < hi,
            "halving bracket fails at %d: %d, %d, %d", n, lo, 2 * s, hi,
        )


def _suite_ineq(run: _Run, limit: int) -> None:
    # Floor inequalities with denominators cleared, exact in Z[phi].
    # phi*i/floor(phi*i) > 1 + 1/((phi+2) i^2) becomes
    # (1 + 3 phi) i^3 > L (2 i^2 + 1) + L i^2 phi, and
    # phi*i/(floor(phi*i)+1) <= 1 - 1/(2 phi^2 i^2) becomes
    # (2 + 4 phi) i^3 <= (L+1)(2 i^2 - 1) + 2 i^2 (L+1) phi.
    for i in range(1, limit + 1):
        L = floor_phi_times(i)
        i3 = i * i * i
        lhs = GoldenInt(i3, 3 * i3)
        rhs = GoldenInt(L * (2 * i * i + 1), L * i * i)
        run.ok(golden_compare(lhs, rhs) > 0, "lower floor bound fails at %d", i)
        lhs = GoldenInt(2 * i3, 4 * i3)
        c = L + 1
        rhs = GoldenInt(c * (2 * i * i - 1), 2 * i * i * c)
        run.ok(golden_compare(lhs, rhs) <= 0, "upper floor bound fails at %d", i)
        # integer forms of the fractional-part bounds: the norms of
        # L - i*phi and (L+1) - i*phi never vanish
        run.ok(i * i + i * L - L * L >= 1, "lower norm bound fails at %d", i)
        run.ok(c * c - i * c - i * i >= 1, "upper norm bound fails at %d", i)

    # Calculus bounds on 1000-point grids, float with rounding slack.
    x = (2.0 / 3.0) * np.arange(1, 1001) / 1000.0
    sinx = np.sin(np.pi * x)

    def _holds(lhs, rhs) -> bool:
        return bool(
            np.all(lhs <= rhs + _GRID_SLACK * (1.0 + np.abs(lhs) + np.abs(rhs)))
        )

    run.ok(_holds(1.0 / sinx, 1.0 / x), "reciprocal sine bound fails on grid")
    inv = 1.0 / x
    for sig in (1.5, 2.0, 2.5, 4.0, 6.0):
        s_pow = sinx ** -sig
        lhs = np.abs(s_pow[:, None] - s_pow[None, :])
        rhs = (
            sig
            * math.pi ** sig
            * (inv[:, None] + inv[None, :]) ** (sig - 1.0)
            * np.abs(inv[:, None] - inv[None, :])
        )
        run.ok(_holds(lhs, rhs), "sine power difference bound fails at %g", sig)
        run.ok(
            _holds((np.pi * x / sinx) ** sig - 1.0, 4.0 ** (sig + 1.0) * x * x),
            "sinc power bound fails at %g", sig,
        )
        y = np.concatenate([-x[::-1], x])
        run.ok(
            _holds(np.abs((1.0 - y) ** -sig - 1.0), 4.0 ** sig * np.abs(y)),
            "geometric power bound fails at %g", sig,
        )


def _suite_reciprocity(run: _Run, limit: int) -> None:
    rng = random.Random(58231)
    pairs = []
    while len(pairs) < limit:
        c = rng.randrange(2, 5001)
        b = rng.randrange(1, c)
        if math.gcd(b, c) == 1:
            pairs.append((b, c))
    for n in range(3, 16):
        pairs.append((fib(n - 1), fib(n)))
    for b, c in pairs:
        run.ok(apostol_check(b, c), "odd-pair reciprocity fails at (%d, %d)", b, c)
        run.ok(hwz_check(b, c), "even-pair reciprocity fails at (%d, %d)", b, c)


def _suite_closedform(run: _Run, limit: int) -> None:
    # each level costs O(F_n) exact work; 32 caps that at a few seconds
    for n in range(3, min(limit, 32) + 1):
        b, c = fib(n - 1), fib(n)
        run.ok(
            s22_closed(n) == gen_dedekind_sum(2, 2, 1, b, c),
            "(2,2) closed form fails at %d", n,
        )
        s13 = gen_dedekind_sum(1, 3, 1, b, c)
        run.ok(s13_closed(n) == s13, "(1,3) closed form fails at %d", n)
        run.ok(
            gen_dedekind_sum(3, 1, 1, b, c) == (-1) ** n * s13,
            "(1,3)/(3,1) parity fails at %d", n,
        )
        run.ok(
            sigma2_closed(n) == sigma2_closed_abstract(n),
            "quadratic closed forms disagree at %d", n,
        )
        run.ok(
            s22_from_trig_sum(n) == s22_closed(n),
            "trigonometric bridge fails at %d", n,
        )


def _suite_dft(run: _Run, limit: int) -> None:
    sizes = [N for N in (1, 2, 3, 5, 8, 13, 21, 34) if N <= limit] or [limit]
    for two_s in (2, 4, 6):
        for p in (1, 6):
            for N in sizes:
                total, k0 = dft_coeff_sum_exact(two_s, Fraction(p), N)
                run.ok(
                    total == k0,
                    "coefficient sum misses potential at (%d, %d, %d)",
                    two_s, p, N,
                )
                if N < 2:
                    continue
                a = dft_coeffs(float(two_s), float(p), N)
                b = dft_coeffs_even(two_s, float(p), N)
                run.ok(
                    float(np.max(np.abs(a - b))) <= 1e-12,
                    "coefficient routes disagree at (%d, %d, %d)", two_s, p, N,
                )
    # non-integer exponents only have the quadrature route; its column
    # sum must still reproduce the potential at zero
    for sigma in (2.5, 3.5):
        for N in sizes:
            if N < 2:
                continue
            c = dft_coeffs(sigma, 1.0, N)
            k0 = float(potential_K(sigma, 1.0, 0.0))
            run.ok(
                abs(float(np.sum(c)) - k0) <= 1e-10 * max(1.0, abs(k0)),
                "quadrature coefficient sum drifts at (%g, %d)", sigma, N,
            )


def _suite_zeta_routes(run: _Run, limit: int) -> None:
    for sigma in (2, 3, 4, 6):
        routes = ZETA_ROUTES if sigma % 2 == 0 else ZETA_ROUTES[:2]
        vals = [dedekind_zeta(sigma, route=r, truncation=limit) for r in routes]
        for a in range(len(vals)):
            for b in range(a + 1, len(vals)):
                gap = abs(vals[a].value_mp - vals[b].value_mp)
                budget = vals[a].certified_error + vals[b].certified_error
                run.ok(
                    gap <= budget,
                    "zeta routes %s and %s differ by %.3e (budget %.3e) at %g",
                    vals[a].route, vals[b].route, float(gap), float(budget), sigma,
                )


_SUITES: dict[str, tuple] = {
    "wythoff": (_suite_wythoff, 100000),
    "dual": (_suite_dual, 500),
    "floor": (_suite_floor, 10000),
    "ineq": (_suite_ineq, 10000),
    "reciprocity": (_suite_reciprocity, 200),
    "closedform": (_suite_closedform, 25),
    "dft": (_suite_dft, 34),
    "zeta-routes": (_suite_zeta_routes, 100000),
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(name: str, limit: int | None = None) -> SuiteResult:
    """Run one named suite; `limit` rescales its sweep (suite default
    when omitted)."""
    try:
        fn, default = _SUITES[name]
    except KeyError:
        raise ValueError(
            f"unknown suite {name!r}; choose from {', '.join(_SUITES)}"
        ) from None
    lim = default if limit is None else limit
    if lim < 1:
        raise ValueError(f"limit must be >= 1, got {lim}")
    run = _Run()
    t0 = time.perf_counter()
    try:
        fn(run, lim)
    except _Counterexample as ex:
        return SuiteResult(name, False, run.checks, lim, time.perf_counter() - t0, str(ex))
    return SuiteResult(name, True, run.checks, lim, time.perf_counter() - t0)


def run_suites(names=None, limit: int | None = None) -> list[SuiteResult]:
    return [run_suite(n, limit) for n in (names or SUITE_NAMES)]

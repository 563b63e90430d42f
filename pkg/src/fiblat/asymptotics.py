"""Asymptotic constants of the Fibonacci lattice sums.

The normalized level-n sum grows like C*n + D.  C is a prefactor times
the sum of eta_i**-sigma over all rows, a Dedekind zeta value of the
field generated by sqrt 5; D adds two one-sided correction series per
row (one along the row, one along its dual) minus a counting term.

C carries a certified tail (eta_i >= i, so the remainder is dominated
by an integral).  D's inner tails are geometric-ratio estimates and its
outer tail a fitted dyadic decay, both reported rather than certified;
every float path also runs at two precisions and reports the gap as a
rounding proxy.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .energy import fib_sum
from .golden import GoldenInt, fib, phi_power
from .kernels import Kernel, bernoulli_number, bernoulli_poly, kernel_one
from .wythoff import dual_slot, row, row_table

__all__ = [
    "PHI",
    "SeriesValue",
    "CConstant",
    "ClosedConstant",
    "ZetaRoute",
    "ZETA_ROUTES",
    "DConstant",
    "AsymptoticConstants",
    "ExactConstants",
    "ResidualRow",
    "prefactor",
    "delta",
    "delta_star",
    "delta_mp",
    "delta_star_mp",
    "constant_C",
    "constant_C_closed",
    "dedekind_zeta",
    "constant_D",
    "compute_constants",
    "exact_sigma2_constants",
    "residual_fit",
    "approximation_errors",
]

PHI = (1 + 5 ** 0.5) / 2
_CHUNK = 8192  # fixed chunk size keeps the reduction order independent of threading
_PI_STR = "3.14159265358979323846264338327950288420"

ZETA_ROUTES = (
    "eta-series",
    "euler-product-L-times-zeta",
    "bernoulli-closed-form",
)


def prefactor(sigma: float, f0: float) -> float:
    """f(0)**2 * 5**(sigma/2) / pi**(2*sigma): the weight every row term
    in C and D is measured against."""
    return f0 * f0 * 5.0 ** (sigma / 2) / math.pi ** (2 * sigma)


def _pref_mp(sigma: float, f0) -> mpmath.mpf:
    return f0 * f0 * mpmath.power(5, mpmath.mpf(sigma) / 2) / mpmath.pi ** (2 * mpmath.mpf(sigma))


def _f0_mp(kernel: Kernel) -> mpmath.mpf:
    # value_at_zero is analytic; eval_mp(0) would hit the zeta pole for
    # the fsigma family, whose limit at 0 is pi**sigma
    if kernel.kind == "fsigma":
        return mpmath.pi ** kernel.sigma
    return mpmath.mpf(kernel.value_at_zero)


def _golden_mpf(x: GoldenInt) -> mpmath.mpf:
    """Value of a + b*phi at the current working precision."""
    with mpmath.extraprec(max(x.a.bit_length(), x.b.bit_length()) + 16):
        v = (2 * x.a + x.b + x.b * mpmath.sqrt(5)) / 2
    return +v


# ---------------------------------------------------------------------------
# the two one-sided series behind D


@dataclass(frozen=True)
class SeriesValue:
    """Truncated series value with a reported geometric tail estimate."""

    value: float
    tail: float
    terms: int


def _geometric_tail(last: float, prev: float) -> float:
    """Tail estimate from the final two terms: observed ratio times a
    safety factor of two, ratio capped at 0.9 so rounding noise in two
    nearly-equal terms cannot make the bound explode."""
    last, prev = abs(last), abs(prev)
    if last == 0.0:
        return 0.0
    r = min(last / prev, 0.9) if prev > 0 else 0.9
    return 2.0 * last * r / (1.0 - r)


def delta(i: int, sigma: float, kernel: Kernel | None = None,
          k_max: int = 64) -> SeriesValue:
    """Row-side correction series at row i, truncated after k_max terms.

    Term k compares the limiting row term f(0)*f(x)/(pi*W[i,k]*sin(pi*x))**sigma,
    x = -w_minus(i)*phi**-k, against the flat per-slot weight
    f(0)**2 * 5**(sigma/2)/(pi**(2*sigma) * eta_i**sigma); the difference
    decays geometrically in k.
    """
    if sigma <= 1:
        raise ValueError(f"exponent must exceed 1, got {sigma}")
    if k_max < 1:
        raise ValueError(f"need at least one term, got k_max={k_max}")
    kernel = kernel or kernel_one()
    r = row(i)
    f0 = kernel.value_at_zero
    base = prefactor(sigma, f0) / float(r.eta) ** sigma
    wstar = -r.w_minus  # in (phi**-2, 1)
    total = 0.0
    prev = last = 0.0
    wk_prev, wk = r.floor_phi_i, r.entry(1)
    for k in range(1, k_max + 1):
        x = float(wstar * phi_power(-k))
        g = math.pi * wk * math.sin(math.pi * x)
        term = f0 * kernel.eval(x) / g ** sigma - base
        total += term
        prev, last = last, term
        wk_prev, wk = wk, wk_prev + wk
    return SeriesValue(total, _geometric_tail(last, prev), k_max)


def delta_star(i: int, sigma: float, kernel: Kernel | None = None,
               j_max: int = 64) -> SeriesValue:
    """Dual-side correction series at row i, starting at slot mu_i + 1.

    Term j uses the dual entry Wd[i, mu_i + j] and the argument
    x = w_plus(i)*phi**-(mu_i+j), which lies in (0, 1/2) by the choice
    of the threshold mu_i.
    """
    if sigma <= 1:
        raise ValueError(f"exponent must exceed 1, got {sigma}")
    if j_max < 1:
        raise ValueError(f"need at least one term, got j_max={j_max}")
    kernel = kernel or kernel_one()
    r = row(i)
    f0 = kernel.value_at_zero
    base = prefactor(sigma, f0) / float(r.eta) ** sigma
    total = 0.0
    prev = last = 0.0
    for j in range(1, j_max + 1):
        m = r.mu + j
        wd = dual_slot(i, m)
        x = float(r.w_plus * phi_power(-m))
        g = math.pi * wd * math.sin(math.pi * x)
        term = f0 * kernel.eval(x) / g ** sigma - base
        total += term
        prev, last = last, term
    return SeriesValue(total, _geometric_tail(last, prev), j_max)


def delta_mp(i: int, sigma: float, kernel: Kernel | None = None,
             k_max: int = 64, prec: int = 200) -> mpmath.mpf:
    """delta recomputed in prec-bit arithmetic; an independent oracle for
    the float path (exact integer entries, exact ring arguments)."""
    kernel = kernel or kernel_one()
    r = row(i)
    wstar = -r.w_minus
    with mpmath.workprec(prec):
        f0 = _f0_mp(kernel)
        base = _pref_mp(sigma, f0) / mpmath.mpf(r.eta) ** sigma
        total = mpmath.mpf(0)
        wk_prev, wk = r.floor_phi_i, r.entry(1)
        for k in range(1, k_max + 1):
            x = _golden_mpf(wstar * phi_power(-k))
            g = mpmath.pi * wk * mpmath.sinpi(x)
            total += f0 * kernel.eval_mp(x) / g ** sigma - base
            wk_prev, wk = wk, wk_prev + wk
        return +total


def delta_star_mp(i: int, sigma: float, kernel: Kernel | None = None,
                  j_max: int = 64, prec: int = 200) -> mpmath.mpf:
    """delta_star recomputed in prec-bit arithmetic."""
    kernel = kernel or kernel_one()
    r = row(i)
    with mpmath.workprec(prec):
        f0 = _f0_mp(kernel)
        base = _pref_mp(sigma, f0) / mpmath.mpf(r.eta) ** sigma
        total = mpmath.mpf(0)
        for j in range(1, j_max + 1):
            m = r.mu + j
            wd = dual_slot(i, m)
            x = _golden_mpf(r.w_plus * phi_power(-m))
            g = mpmath.pi * wd * mpmath.sinpi(x)
            total += f0 * kernel.eval_mp(x) / g ** sigma - base
        return +total


# ---------------------------------------------------------------------------
# the linear coefficient C


@dataclass(frozen=True)
class CConstant:
    """Series value of the linear coefficient with a certified tail."""

    value: float
    tail_bound: float
    sigma: float
    f0: float
    i_max: int
    prec: int
    value_mp: mpmath.mpf


def _eta_power_sum(eta: np.ndarray, sigma: float) -> mpmath.mpf:
    """sum of eta**-sigma at the current working precision, smallest
    terms first."""
    if float(sigma).is_integer():
        s = int(sigma)
        return mpmath.fsum(mpmath.mpf(1) / (int(e) ** s) for e in eta[::-1])
    return mpmath.fsum(mpmath.mpf(int(e)) ** (-sigma) for e in eta[::-1])


def constant_C(sigma: float, kernel: Kernel | None = None,
               i_max: int = 100000, *, f0: float | None = None,
               prec: int | None = None) -> CConstant:
    """C = 2 f(0)**2 5**(sigma/2)/pi**(2*sigma) * sum_i eta_i**-sigma,
    truncated at i_max.

    The tail is certified: eta_i >= i gives
    sum_{i>i_max} eta_i**-sigma <= i_max**(1-sigma)/(sigma-1).  For
    large sigma that tail sits far below double precision, so the sum
    is accumulated in mpmath at a precision matched to the tail and
    returned both as a float and as value_mp.
    """
    if sigma <= 1:
        raise ValueError(f"exponent must exceed 1, got {sigma}")
    if f0 is None:
        f0 = kernel.value_at_zero if kernel is not None else 1.0
    if prec is None:
        prec = max(60, int((sigma - 1) * math.log2(i_max)) + 30)
    tab = row_table(i_max)
    with mpmath.workprec(prec):
        c_mp = 2 * _pref_mp(sigma, mpmath.mpf(f0)) * _eta_power_sum(tab.eta, sigma)
    tail = 2 * prefactor(sigma, f0) * i_max ** (1 - sigma) / (sigma - 1)
    return CConstant(float(c_mp), tail, float(sigma), float(f0), i_max, prec, c_mp)


@dataclass(frozen=True)
class ClosedConstant:
    """Exact closed form of C for even integer exponents.

    value = coefficient / sqrt(5)**sqrt5_power with coefficient rational.
    """

    coefficient: Fraction
    sqrt5_power: int
    value: float
    value_mp: mpmath.mpf


def constant_C_closed(sigma: int, f0=1) -> ClosedConstant:
    """C at sigma = 2s in closed form:
    f0**2 * 80**s * (B_{2s}(1/5) - B_{2s}(2/5)) * B_{2s} / ((2s)!**2 * sqrt5)."""
    if sigma != int(sigma) or int(sigma) < 2 or int(sigma) % 2:
        raise ValueError(f"closed form needs a positive even integer exponent, got {sigma}")
    two_s = int(sigma)
    s = two_s // 2
    db = bernoulli_poly(two_s, Fraction(1, 5)) - bernoulli_poly(two_s, Fraction(2, 5))
    coeff = (Fraction(f0) ** 2 * Fraction(80) ** s * db * bernoulli_number(two_s)
             / Fraction(math.factorial(two_s)) ** 2)
    with mpmath.workprec(120):
        v = mpmath.mpf(coeff.numerator) / coeff.denominator / mpmath.sqrt(5)
    return ClosedConstant(coeff, 1, float(v), v)


# ---------------------------------------------------------------------------
# the zeta value behind C, by three routes


@dataclass(frozen=True)
class ZetaRoute:
    route: str
    sigma: float
    value: float
    certified_error: float
    truncation: int
    value_mp: mpmath.mpf


_CHI5 = (0, 1, -1, -1, 1)  # the quadratic character mod 5


def dedekind_zeta(sigma: float, route: str = "eta-series",
                  truncation: int = 100000) -> ZetaRoute:
    """The zeta value sum_i eta_i**-sigma by one of three routes.

    eta-series sums the row invariants directly (tail certified via
    eta_i >= i).  euler-product-L-times-zeta multiplies the Riemann
    zeta by the character L-series mod 5, whose partial character sums
    are bounded by 1, giving the tail 2*(N+1)**-sigma.  The Bernoulli
    closed form (even integer sigma only) is exact up to arithmetic
    rounding.
    """
    if sigma <= 1:
        raise ValueError(f"exponent must exceed 1, got {sigma}")
    if route not in ZETA_ROUTES:
        raise ValueError(f"unknown route {route!r}; expected one of {ZETA_ROUTES}")
    if route == "bernoulli-closed-form":
        if sigma != int(sigma) or int(sigma) % 2:
            raise ValueError(f"closed form needs an even integer exponent, got {sigma}")
        two_s = int(sigma)
        s = two_s // 2
        db = bernoulli_poly(two_s, Fraction(1, 5)) - bernoulli_poly(two_s, Fraction(2, 5))
        q = (Fraction(16) ** s * db * bernoulli_number(two_s)
             / (2 * Fraction(math.factorial(two_s)) ** 2))
        with mpmath.workprec(120):
            v = (mpmath.mpf(q.numerator) / q.denominator
                 * mpmath.pi ** (2 * two_s) / mpmath.sqrt(5))
        return ZetaRoute(route, float(sigma), float(v), float(abs(v)) * 2.0 ** -100, 0, v)

    n_top = int(truncation)
    if n_top < 8:
        raise ValueError(f"truncation too small: {n_top}")
    if route == "eta-series":
        prec = max(60, int((sigma - 1) * math.log2(n_top)) + 30)
        tab = row_table(n_top)
        with mpmath.workprec(prec):
            total = _eta_power_sum(tab.eta, sigma)
        tail = n_top ** (1 - sigma) / (sigma - 1)
        err = tail + float(total) * 2.0 ** (18 - prec)
        return ZetaRoute(route, float(sigma), float(total), err, n_top, total)

    # euler-product-L-times-zeta
    prec = max(60, int(sigma * math.log2(n_top)) + 30)
    with mpmath.workprec(prec):
        if float(sigma).is_integer():
            s = int(sigma)
            lser = mpmath.fsum(
                mpmath.mpf(_CHI5[n % 5]) / (n ** s)
                for n in range(n_top, 0, -1) if n % 5
            )
        else:
            lser = mpmath.fsum(
                _CHI5[n % 5] * mpmath.mpf(n) ** (-sigma)
                for n in range(n_top, 0, -1) if n % 5
            )
        z = mpmath.zeta(mpmath.mpf(sigma))
        v = z * lser
    tail = 2.0 * float(z) * (n_top + 1) ** (-sigma)
    err = tail + float(abs(v)) * 2.0 ** (18 - prec)
    return ZetaRoute(route, float(sigma), float(v), err, n_top, v)


# ---------------------------------------------------------------------------
# the offset D: vectorized two-precision row sweep


@dataclass(frozen=True)
class DConstant:
    """Truncated offset series with reported (not certified) errors."""

    value: float
    inner_tail: float
    outer_tail: float
    precision_gap: float
    sigma: float
    kernel: str
    i_max: int
    k_max: int

    @property
    def error_estimate(self) -> float:
        return self.inner_tail + self.outer_tail + self.precision_gap


def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("FIBLAT_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _eval_kernel_arr(kernel: Kernel, x: np.ndarray, pi) -> np.ndarray | None:
    """Kernel values in the dtype of x; None means identically 1."""
    if kernel.kind == "one":
        return None
    if kernel.kind == "trig":
        u = np.cos(pi * x) ** 2
        acc = np.zeros_like(u)
        for c in reversed(kernel.coeffs):
            acc = acc * u + c
        return acc
    # no widened implementation for the zeta-weighted family: evaluate
    # at double and cast, which caps (and is covered by) the reported
    # precision gap
    return kernel.eval_many(np.asarray(x, dtype=np.float64)).astype(x.dtype)


def _tail_mass(last: np.ndarray, prev: np.ndarray) -> float:
    last = np.abs(last)
    prev = np.abs(prev)
    with np.errstate(divide="ignore", invalid="ignore"):
        r = np.where(prev > 0, last / prev, 0.9)
    r = np.minimum(r, 0.9)
    t = 2.0 * last * r / (1.0 - r)
    return float(np.where(last > 0, t, 0).sum())


def _d_chunk(tab, lo: int, hi: int, sigma: float, kernel: Kernel,
             k_max: int, i_max: int, dtype):
    """Row terms delta + delta_star - base*(mu+1) summed over rows
    (lo, hi] (0-based slice), all in the requested dtype.

    Returns (sum, inner tail mass, |term| mass over i > i_max/2,
    |term| mass over i_max/4 < i <= i_max/2).
    """
    pi = dtype(_PI_STR)
    sqrt5 = np.sqrt(dtype(5))
    phi = (1 + sqrt5) / 2
    sg = dtype(sigma)
    f0 = dtype(kernel.value_at_zero)
    pref = f0 * f0 * dtype(5) ** (sg / 2) / pi ** (2 * sg)

    iv = tab.i[lo:hi]
    idx = iv.astype(dtype)
    L = tab.floor_phi_i[lo:hi].astype(dtype)
    eta = tab.eta[lo:hi].astype(dtype)
    mu = tab.mu[lo:hi]
    wp = (idx - 1) + L * phi
    wmn = (phi - 1) * L - (idx - 1)  # -w_minus, in (phi**-2, 1)
    base = pref / eta ** sg
    acc = -(mu.astype(dtype) + 1) * base

    prev_t = last_t = None
    for k in range(1, k_max + 1):
        pk = phi ** k
        x = wmn * (1 / pk)
        w = (wp * pk + (x if k % 2 == 0 else -x)) / sqrt5
        g = pi * w * np.sin(pi * x)
        fx = _eval_kernel_arr(kernel, x, pi)
        t = (f0 / g ** sg if fx is None else f0 * fx / g ** sg) - base
        acc += t
        prev_t, last_t = last_t, t
    inner = _tail_mass(last_t, prev_t)

    pmu = np.power(phi, mu)
    wmn_up = wmn * pmu
    wp_dn = wp / pmu
    smu = np.where(mu % 2 == 0, dtype(1), dtype(-1))
    prev_t = last_t = None
    for j in range(1, k_max + 1):
        pj = phi ** j
        x = wp_dn * (1 / pj)
        sx = smu * x
        w = (wmn_up * pj + (sx if j % 2 == 0 else -sx)) / sqrt5
        g = pi * w * np.sin(pi * x)
        fx = _eval_kernel_arr(kernel, x, pi)
        t = (f0 / g ** sg if fx is None else f0 * fx / g ** sg) - base
        acc += t
        prev_t, last_t = last_t, t
    inner += _tail_mass(last_t, prev_t)

    rabs = np.abs(acc)
    m_hi = float(rabs[2 * iv > i_max].sum())
    m_mid = float(rabs[(4 * iv > i_max) & (2 * iv <= i_max)].sum())
    return acc.sum(), inner, m_hi, m_mid


def _d_pass(tab, sigma: float, kernel: Kernel, k_max: int, i_max: int,
            dtype, threads: int):
    spans = [(lo, min(lo + _CHUNK, i_max)) for lo in range(0, i_max, _CHUNK)]

    def work(span):
        return _d_chunk(tab, span[0], span[1], sigma, kernel, k_max, i_max, dtype)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(work, spans))
    else:
        parts = [work(s) for s in spans]
    total = dtype(0)
    inner = m_hi = m_mid = 0.0
    for p in parts:  # fixed order: deterministic for any thread count
        total = total + p[0]
        inner += p[1]
        m_hi += p[2]
        m_mid += p[3]
    value = 2.0 * float(total)
    inner *= 2.0
    # dyadic decay of the outer |term| mass, fitted from the last two
    # halvings and extended geometrically (safety factor two)
    q = min(m_hi / m_mid, 0.95) if m_mid > 0 else 0.95
    outer = 2.0 * 2.0 * m_hi * q / (1.0 - q)
    return value, inner, outer


def constant_D(sigma: float, kernel: Kernel | None = None,
               i_max: int = 100000, k_max: int = 64, *,
               threads: int | None = None,
               two_precision: bool = True) -> DConstant:
    """D = 2 sum_i (delta(i) + delta_star(i) - base_i*(mu_i+1)) truncated
    at i_max rows and k_max inner terms.

    Runs the sweep in extended precision and (by default) again at
    double, reporting the difference as the rounding proxy.  Outer sums
    are chunked with a fixed chunk size and reduced in index order, so
    the result does not depend on the thread count.
    """
    if sigma <= 1:
        raise ValueError(f"exponent must exceed 1, got {sigma}")
    if i_max < 8:
        raise ValueError(f"row truncation too small: {i_max}")
    if k_max < 2:
        raise ValueError(f"need at least two inner terms, got k_max={k_max}")
    kernel = kernel or kernel_one()
    nthreads = _thread_count(threads)
    tab = row_table(i_max)
    value, inner, outer = _d_pass(tab, sigma, kernel, k_max, i_max,
                                  np.longdouble, nthreads)
    gap = 0.0
    if two_precision:
        lo_value, _, _ = _d_pass(tab, sigma, kernel, k_max, i_max,
                                 np.float64, nthreads)
        gap = abs(value - lo_value)
    return DConstant(value, inner, outer, gap, float(sigma), kernel.name,
                     i_max, k_max)


@dataclass(frozen=True)
class AsymptoticConstants:
    sigma: float
    kernel: str
    c: float
    d: float
    i_max: int
    k_max: int
    tail_bound: float  # certified tail of c (from eta_i >= i)
    d_error: float     # reported error estimate of d


def compute_constants(sigma: float, kernel: Kernel | None = None,
                      i_max: int = 100000, k_max: int = 64, *,
                      threads: int | None = None) -> AsymptoticConstants:
    """Both constants at matched truncations."""
    kernel = kernel or kernel_one()
    c = constant_C(sigma, kernel, i_max)
    d = constant_D(sigma, kernel, i_max, k_max, threads=threads)
    return AsymptoticConstants(float(sigma), kernel.name, c.value, d.value,
                               i_max, k_max, c.tail_bound, d.error_estimate)


# ---------------------------------------------------------------------------
# residual analysis


@dataclass(frozen=True)
class ExactConstants:
    """Exact constants for sigma=2 with the constant weight.

    c_scaled = C*sqrt5.  Both follow from the exact level formula
    4n/75*F_{2n} - 17/225*F_n**2 - (-1)**n*2/15 - 1/9 after dividing by
    F_n**2, since F_{2n}/F_n**2 -> sqrt5.
    """

    c_scaled: Fraction
    d: Fraction

    @property
    def c(self) -> float:
        return float(self.c_scaled) / 5 ** 0.5


def exact_sigma2_constants() -> ExactConstants:
    return ExactConstants(Fraction(4, 15), Fraction(-17, 225))


@dataclass(frozen=True)
class ResidualRow:
    n: int
    total: float
    asymptote: float
    residual: float
    scaled_residual: float


def residual_fit(sigma: float, kernel: Kernel | None = None,
                 n_min: int = 5, n_max: int = 25, *,
                 c: float | None = None, d: float | None = None,
                 i_max: int = 100000, k_max: int = 64,
                 threads: int | None = None) -> list[ResidualRow]:
    """Level sums against the fitted line c*n + d.

    Constants are taken exactly for sigma=2 with the constant weight and
    from the truncated series otherwise (or passed in directly).  The
    scaled residual multiplies by phi**(beta*n/2) with
    beta = min(alpha, sigma-1), the claimed decay normalization.
    """
    if n_max > 32:
        raise ValueError(f"level cap is 32, got {n_max}")
    if n_min < 2 or n_min > n_max:
        raise ValueError(f"bad level range [{n_min}, {n_max}]")
    kernel = kernel or kernel_one()
    if c is None or d is None:
        if sigma == 2 and kernel.kind == "one":
            exact = exact_sigma2_constants()
            c = exact.c if c is None else c
            d = float(exact.d) if d is None else d
        else:
            if c is None:
                c = constant_C(sigma, kernel, i_max).value
            if d is None:
                d = constant_D(sigma, kernel, i_max, k_max, threads=threads).value
    beta = min(kernel.holder_alpha, sigma - 1)
    out = []
    for n in range(n_min, n_max + 1):
        total = fib_sum(n, sigma, kernel)
        asym = c * n + d
        res = total - asym
        scaled = res * PHI ** (beta * n / 2)
        out.append(ResidualRow(n, total, asym, res, scaled))
    return out


def approximation_errors(i: int, n: int, k: int, sigma: float,
                         kernel: Kernel | None = None) -> tuple[float, float]:
    """Distance from the exact level-n term at row i, slot k to each of
    its two one-sided limits (row side and dual side).

    Requires 1 <= k < n - mu_i so the dual slot n - k is defined.  Used
    to check that the errors decay like phi**(-alpha*(n-k))*i**(alpha-sigma)
    and phi**(-alpha*k)*i**(alpha-sigma) respectively.
    """
    kernel = kernel or kernel_one()
    r = row(i)
    if not 1 <= k < n - r.mu:
        raise ValueError(f"slot {k} outside (0, n - mu_{i}) = (0, {n - r.mu})")
    fn = fib(n)
    f0 = kernel.value_at_zero
    w = r.entry(k)
    wd = dual_slot(i, n - k)
    t1 = w / fn
    t2 = wd / fn
    exact = (kernel.eval(t1) * kernel.eval(t2)
             / (fn * math.sin(math.pi * t1) * math.sin(math.pi * t2)) ** sigma)
    x = float(-r.w_minus * phi_power(-k))
    row_side = (f0 * kernel.eval(x)
                / (math.pi * w * math.sin(math.pi * x)) ** sigma)
    xd = float(r.w_plus * phi_power(-(n - k)))
    dual_side = (f0 * kernel.eval(xd)
                 / (math.pi * wd * math.sin(math.pi * xd)) ** sigma)
    return abs(exact - row_side), abs(exact - dual_side)

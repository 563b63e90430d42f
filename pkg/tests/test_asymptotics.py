import math
from fractions import Fraction

import mpmath
import pytest

from fiblat.asymptotics import (
    PHI,
    approximation_errors,
    compute_constants,
    constant_C,
    constant_C_closed,
    constant_D,
    dedekind_zeta,
    delta,
    delta_mp,
    delta_star,
    delta_star_mp,
    exact_sigma2_constants,
    prefactor,
    residual_fit,
    ZETA_ROUTES,
)
from fiblat.kernels import kernel_bernoulli_weight, kernel_fsigma, kernel_one
from fiblat.wythoff import row


def test_prefactor():
    assert prefactor(2.0, 1.0) == pytest.approx(5 / math.pi ** 4, rel=1e-15)
    assert prefactor(4.0, 6.0) == pytest.approx(36 * 25 / math.pi ** 8, rel=1e-15)


def test_delta_against_highprec_oracle():
    for sigma, kernel in ((2.0, kernel_one()), (2.5, kernel_fsigma(2.5)),
                          (4.0, kernel_bernoulli_weight(4))):
        for i in (1, 2, 3, 7, 20, 100, 1000):
            d = delta(i, sigma, kernel)
            ds = delta_star(i, sigma, kernel)
            o = float(delta_mp(i, sigma, kernel, prec=100))
            os_ = float(delta_star_mp(i, sigma, kernel, prec=100))
            assert abs(d.value - o) <= 2e-10 * max(1.0, abs(o))
            assert abs(ds.value - os_) <= 2e-10 * max(1.0, abs(os_))
            assert d.tail <= 1e-13 * max(1.0, abs(d.value))
            assert ds.tail <= 1e-13 * max(1.0, abs(ds.value))


def test_row_one_is_self_dual():
    # W[1, k] = F_{k+1} and the dual array reproduces the same shifts
    d = delta(1, 2.0)
    ds = delta_star(1, 2.0)
    assert d.value == pytest.approx(ds.value, rel=1e-13)


def test_delta_decays_quadratically():
    vals = [abs(delta(i, 2.0).value) for i in range(1, 120)]
    assert max(i * i * v for i, v in enumerate(vals, start=1)) <= 1.0
    # the i**-2 envelope: quadrupling i cuts the term by ~4
    assert vals[79] < 0.2 * vals[19]


def test_offset_series_matches_scalar_reconstruction():
    pref = prefactor(2.0, 1.0)
    acc = 0.0
    for i in range(1, 51):
        r = row(i)
        acc += (delta(i, 2.0, k_max=32).value
                + delta_star(i, 2.0, j_max=32).value
                - pref * (r.mu + 1) / float(r.eta) ** 2)
    vec = constant_D(2.0, i_max=50, k_max=32)
    assert vec.value == pytest.approx(2 * acc, abs=1e-9)
    assert vec.error_estimate > 0


def test_offset_series_thread_invariant():
    a = constant_D(2.0, i_max=2000, k_max=24, threads=1)
    b = constant_D(2.0, i_max=2000, k_max=24, threads=4)
    assert a.value == b.value  # bit-identical by fixed chunking
    assert a.error_estimate == b.error_estimate


def test_offset_series_validates_arguments():
    with pytest.raises(ValueError):
        constant_D(2.0, i_max=4)
    with pytest.raises(ValueError):
        constant_D(2.0, k_max=1)


def test_linear_constant_tail_is_honest():
    for sigma in (2.0, 4.0):
        small = constant_C(sigma, i_max=500)
        big = constant_C(sigma, i_max=8000)
        assert abs(small.value - big.value) <= small.tail_bound
        closed = constant_C_closed(int(sigma))
        assert abs(small.value - closed.value) <= small.tail_bound
        assert small.value > 0
        assert small.value == pytest.approx(float(small.value_mp), rel=1e-15)


def test_closed_constant_values_and_ratio():
    c2 = constant_C_closed(2)
    assert c2.coefficient == Fraction(4, 15)
    assert c2.sqrt5_power == 1
    assert c2.value == pytest.approx(4 / (15 * 5 ** 0.5), rel=1e-14)
    assert constant_C_closed(4).coefficient == Fraction(8, 675)
    # consecutive even exponents approach the ratio 5/pi^4
    tgt = 5 / math.pi ** 4
    r1 = constant_C_closed(10).value / constant_C_closed(8).value
    r2 = constant_C_closed(12).value / constant_C_closed(10).value
    assert r1 == pytest.approx(tgt, rel=1e-4)
    assert r2 == pytest.approx(tgt, rel=1e-5)
    assert abs(r2 - tgt) < abs(r1 - tgt)
    with pytest.raises(ValueError):
        constant_C_closed(3)


def test_quadratic_field_zeta_routes_agree():
    for sigma in (2.0, 2.5, 4.0):
        routes = ZETA_ROUTES if float(sigma).is_integer() else ZETA_ROUTES[:2]
        got = [dedekind_zeta(sigma, rt, truncation=20000) for rt in routes]
        for a in got:
            for b in got:
                assert abs(a.value - b.value) <= a.certified_error + b.certified_error
    closed = dedekind_zeta(2.0, "bernoulli-closed-form")
    assert closed.value == pytest.approx(2 * math.pi ** 4 / (75 * 5 ** 0.5), rel=1e-13)
    series = dedekind_zeta(2.0, "eta-series", truncation=20000)
    assert abs(series.value - closed.value) <= series.certified_error


def test_zeta_route_validation():
    with pytest.raises(ValueError):
        dedekind_zeta(3.0, "bernoulli-closed-form")
    with pytest.raises(ValueError):
        dedekind_zeta(2.0, "riemann")
    with pytest.raises(ValueError):
        dedekind_zeta(1.0)


def test_exact_constants():
    ex = exact_sigma2_constants()
    assert ex.c_scaled == Fraction(4, 15)
    assert ex.d == Fraction(-17, 225)
    assert ex.c == pytest.approx(0.11925695879998878, rel=1e-15)
    assert ex.c == pytest.approx(constant_C_closed(2).value, rel=1e-14)


def test_residual_fit_exact_line():
    rows = residual_fit(2.0, n_min=6, n_max=24)
    assert [r.n for r in rows] == list(range(6, 25))
    # residual of the exact line decays like n*phi^(-2n)
    m = max(abs(r.residual) * PHI ** (2 * r.n) / r.n for r in rows)
    assert m <= 0.3
    for r in rows:
        assert r.scaled_residual == pytest.approx(
            r.residual * PHI ** (r.n / 2), rel=1e-12)
        assert r.asymptote == pytest.approx(
            float(Fraction(4, 15)) / 5 ** 0.5 * r.n - 17 / 225, rel=1e-14)
    with pytest.raises(ValueError):
        residual_fit(2.0, n_max=33)
    with pytest.raises(ValueError):
        residual_fit(2.0, n_min=1)


def test_residual_fit_with_supplied_constants():
    rows = residual_fit(2.0, n_min=8, n_max=14, c=0.5, d=0.0)
    for r in rows:
        assert r.asymptote == 0.5 * r.n
        assert r.residual == r.total - r.asymptote


def test_two_sided_approximation_errors():
    sup_row = sup_dual = 0.0
    for i in (1, 2, 3, 5, 8, 20, 50):
        mu = row(i).mu
        for n in range(mu + 3, mu + 16):
            for k in range(1, n - mu):
                er, ed = approximation_errors(i, n, k, 2.0)
                sup_row = max(sup_row, er * PHI ** (n - k) * i)
                sup_dual = max(sup_dual, ed * PHI ** k * i)
    assert sup_row <= 1.0
    assert sup_dual <= 1.0
    with pytest.raises(ValueError):
        approximation_errors(1, 10, 9, 2.0)


def test_compute_constants_bundle():
    got = compute_constants(2.0, i_max=400, k_max=24)
    assert got.kernel == "one"
    assert got.c == pytest.approx(constant_C(2.0, i_max=400).value, rel=1e-15)
    assert got.d == pytest.approx(
        constant_D(2.0, i_max=400, k_max=24).value, rel=1e-15)
    assert got.tail_bound > 0 and got.d_error > 0


def test_offset_matches_exact_value_within_reported_error():
    got = constant_D(2.0, i_max=20000, k_max=48)
    want = -17 / 225
    assert abs(got.value - want) <= max(got.error_estimate, 5e-7)

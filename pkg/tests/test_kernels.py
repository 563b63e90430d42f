import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from fiblat.kernels import (
    KERNEL_GRAMMAR,
    bernoulli_number,
    bernoulli_poly,
    cot_power_sums,
    dft_coeff_sum_exact,
    dft_coeffs,
    dft_coeffs_even,
    f_sigma,
    hurwitz_zeta,
    kernel_bernoulli_weight,
    kernel_fsigma,
    kernel_one,
    kernel_trig,
    parse_kernel,
    potential_K,
    zeta,
)


def test_bernoulli_numbers():
    known = {0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(1, 6),
             4: Fraction(-1, 30), 6: Fraction(1, 42), 8: Fraction(-1, 30),
             12: Fraction(-691, 2730)}
    for m, b in known.items():
        assert bernoulli_number(m) == b
    for m in (3, 5, 7, 9, 11):
        assert bernoulli_number(m) == 0


def test_bernoulli_polynomials_exact():
    t = Fraction(1, 5)
    assert bernoulli_poly(2, t) == t * t - t + Fraction(1, 6)
    assert bernoulli_poly(4, Fraction(0)) == bernoulli_number(4)
    # reflection B_m(1 - t) = (-1)^m B_m(t)
    for m in range(1, 9):
        for num in range(0, 6):
            x = Fraction(num, 5)
            assert bernoulli_poly(m, 1 - x) == (-1) ** m * bernoulli_poly(m, x)


def test_hurwitz_zeta_against_mpmath():
    with mpmath.workprec(80):
        for s in (1.5, 2.0, 2.5, 4.0, 6.0):
            for a in (0.05, 0.1, 0.3, 0.5, 0.77, 1.0):
                want = float(mpmath.zeta(s, a))
                assert hurwitz_zeta(s, a, tol=1e-14) == pytest.approx(
                    want, rel=1e-12
                )
        assert zeta(2.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-13)
        assert zeta(3.5) == pytest.approx(float(mpmath.zeta(3.5)), rel=1e-13)


def test_f_sigma_is_symmetric_and_matches_scalar():
    for s in (2.0, 2.5, 4.0):
        for a in (0.1, 0.25, 0.4):
            assert f_sigma(s, a) == pytest.approx(f_sigma(s, 1 - a), rel=1e-12)
    k = kernel_fsigma(2.5)
    xs = np.array([0.1, 0.2, 0.35, 0.5])
    many = k.eval_many(xs)
    for x, v in zip(xs, many):
        assert v == pytest.approx(k.eval(float(x)), rel=1e-10)


def test_kernel_values_at_zero_and_smoothness_class():
    assert kernel_one().value_at_zero == 1.0
    assert kernel_bernoulli_weight(2).coeffs == (1,)
    assert kernel_bernoulli_weight(4).coeffs == (2, 4)
    assert kernel_bernoulli_weight(6).coeffs == (16, 88, 16)
    assert kernel_bernoulli_weight(4).value_at_zero == 6.0
    assert kernel_bernoulli_weight(6).value_at_zero == 120.0
    assert kernel_fsigma(2.5).value_at_zero == pytest.approx(math.pi ** 2.5)
    assert kernel_one().holder_alpha == 1.0
    assert kernel_trig([1, 2]).holder_alpha == 1.0
    assert kernel_fsigma(1.5).holder_alpha == 0.5
    assert kernel_fsigma(4.0).holder_alpha == 1.0


def test_trig_kernel_evaluates_cosine_polynomial():
    k = kernel_trig([2, 4])
    for t in (0.0, 0.1, 0.33, 0.5, 0.91):
        u = math.cos(math.pi * t) ** 2
        assert k.eval(t) == pytest.approx(2 + 4 * u, rel=1e-15)
    with mpmath.workprec(80):
        assert float(k.eval_mp(mpmath.mpf(1) / 3)) == pytest.approx(
            k.eval(1 / 3), rel=1e-13
        )


def test_parse_kernel_grammar():
    assert parse_kernel("one").name == "one"
    assert parse_kernel("bern:6").name == "bern:6"
    assert parse_kernel("trig:2,4").coeffs == (2, 4)
    assert parse_kernel("fsigma", sigma=2.5).sigma == 2.5
    with pytest.raises(ValueError, match="grammar"):
        parse_kernel("nope")
    with pytest.raises(ValueError):
        parse_kernel("fsigma")
    with pytest.raises(ValueError, match="grammar"):
        parse_kernel("trig:a,b")
    assert "one" in KERNEL_GRAMMAR


def test_potential_even_exponent_is_exact_bernoulli_path():
    val = potential_K(2, Fraction(1), Fraction(1, 3))
    assert isinstance(val, Fraction)
    assert val == 1 + Fraction(1, 2) * bernoulli_poly(2, Fraction(1, 3))
    # float route approaches the exact one for even sigma
    assert float(val) == pytest.approx(potential_K(2.0, 1.0, 1.0 / 3.0), rel=1e-12)


def test_potential_series_route_matches_reference():
    # at t = a/q the cosine series collapses to q Hurwitz zeta values:
    # sum_m cos(2 pi m t)/m^sigma = q^-sigma sum_r cos(2 pi r t) zeta(sigma, r/q)
    with mpmath.workprec(80):
        for sigma in (2.5, 3.5):
            for a, q in ((1, 10), (1, 4), (1, 2)):
                t = mpmath.mpf(a) / q
                series = q ** -mpmath.mpf(sigma) * mpmath.fsum(
                    mpmath.cos(2 * mpmath.pi * r * t)
                    * mpmath.zeta(sigma, mpmath.mpf(r) / q)
                    for r in range(1, q + 1)
                )
                want = float(1 + 2 * series / (2 * mpmath.pi) ** sigma)
                assert potential_K(sigma, 1.0, a / q, tol=1e-13) == pytest.approx(
                    want, rel=1e-10
                )


def test_dft_table_inverse_transforms_to_potential():
    for N in (5, 8, 13):
        for sigma, p in ((2.0, 1.0), (2.5, 6.0), (4.0, 1.0)):
            c = dft_coeffs(sigma, p, N)
            for k in (0, 1, N // 2):
                recon = float(
                    np.sum(c * np.cos(2 * np.pi * np.arange(N) * k / N))
                )
                want = float(potential_K(sigma, p, k / N))
                assert recon == pytest.approx(want, rel=1e-10, abs=1e-12)


def test_dft_even_route_matches_quadrature_route():
    for two_s in (2, 4, 6):
        for p in (1.0, 6.0):
            for N in (2, 3, 5, 8, 21):
                a = dft_coeffs(float(two_s), p, N)
                b = dft_coeffs_even(two_s, p, N)
                assert float(np.max(np.abs(a - b))) < 1e-12


def test_cot_power_sums_match_float_sums():
    for N in (2, 3, 4, 7, 12, 31):
        S = cot_power_sums(N, 3)
        assert S[0] == N - 1
        for r in range(1, 4):
            want = sum(
                (1 / math.tan(math.pi * m / N)) ** (2 * r)
                for m in range(1, N) if 2 * m != N
            )
            assert float(S[r]) == pytest.approx(want, rel=1e-11, abs=1e-11)
    # quartic sum has a classical closed form
    for N in (5, 9, 14):
        assert cot_power_sums(N, 2)[2] == Fraction(
            (N - 1) * (N - 2) * (N * N + 3 * N - 13), 45
        )


def test_exact_coefficient_sum_equals_potential_at_zero():
    for two_s in (2, 4, 6):
        for p in (1, Fraction(6)):
            for N in (1, 2, 5, 13, 55):
                total, k0 = dft_coeff_sum_exact(two_s, p, N)
                assert total == k0
                assert k0 == potential_K(two_s, Fraction(p), Fraction(0))

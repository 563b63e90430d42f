import math
from fractions import Fraction

import pytest

from fiblat.dedekind import (
    apostol_check,
    cos2sin4_closed,
    gen_dedekind_sum,
    hwz_check,
    s13_closed,
    s22_closed,
    s22_from_trig_sum,
    sigma2_closed,
    sigma2_closed_abstract,
    sigma4_closed,
    sigma6_closed,
    sin4_closed,
)
from fiblat.golden import fib
from fiblat.kernels import bernoulli_poly


def brute_sum(ell, m, a, b, c):
    total = Fraction(0)
    for k in range(c):
        total += bernoulli_poly(ell, Fraction(a * k % c, c)) * bernoulli_poly(
            m, Fraction(b * k % c, c)
        )
    return total


@pytest.mark.parametrize("ell,m", [(1, 1), (2, 2), (1, 3), (3, 1), (2, 4)])
def test_gen_sum_matches_definition(ell, m):
    for b, c in [(1, 1), (1, 2), (2, 3), (3, 5), (5, 8), (7, 19), (13, 21), (11, 64)]:
        assert gen_dedekind_sum(ell, m, 1, b, c) == brute_sum(ell, m, 1, b, c)
    assert gen_dedekind_sum(ell, m, 3, 7, 11) == brute_sum(ell, m, 3, 7, 11)


def test_first_order_sum_extends_the_classical_one():
    # the k = 0 term contributes B_1(0)^2 = 1/4 on top of the sawtooth
    # sum, whose textbook value is (c-1)(c-2)/(12c)
    for c in (2, 3, 5, 12, 31):
        assert gen_dedekind_sum(1, 1, 1, 1, c) - Fraction(1, 4) == Fraction(
            (c - 1) * (c - 2), 12 * c
        )
    # sawtooth reciprocity on a spot pair, same offset on both sums
    s = lambda b, c: gen_dedekind_sum(1, 1, 1, b, c) - Fraction(1, 4)
    b, c = 5, 8
    assert s(b, c) + s(c, b) == Fraction(-1, 4) + Fraction(
        b * b + c * c + 1, 12 * b * c
    )


def test_gen_sum_is_periodic_in_the_multiplier():
    for b, c in [(3, 5), (5, 8), (4, 9)]:
        assert gen_dedekind_sum(2, 2, 1, b + c, c) == gen_dedekind_sum(2, 2, 1, b, c)


def test_closed_forms_match_gen_sums_small_levels():
    for n in range(2, 13):
        b, c = fib(n - 1), fib(n)
        assert s22_closed(n) == gen_dedekind_sum(2, 2, 1, b, c)
        s13 = gen_dedekind_sum(1, 3, 1, b, c)
        assert s13_closed(n) == s13
        assert gen_dedekind_sum(3, 1, 1, b, c) == (-1) ** n * s13


def test_degenerate_level_value():
    # at n = 2 the modulus is 1: the sum has the single k = 0 term
    assert gen_dedekind_sum(2, 2, 1, 1, 1) == Fraction(1, 36)
    assert s22_closed(2) == Fraction(1, 36)


def test_quadratic_closed_forms_agree():
    for n in range(2, 30):
        assert sigma2_closed(n) == sigma2_closed_abstract(n)
        assert s22_from_trig_sum(n) == s22_closed(n)


def test_trig_closed_forms_match_float_lattice_sums():
    from fiblat.energy import fib_sum
    from fiblat.kernels import kernel_bernoulli_weight, kernel_one, kernel_trig

    for n in range(5, 13):
        pairs = [
            (sigma2_closed(n), fib_sum(n, 2, kernel_one(), normalized=False)),
            (sigma4_closed(n), fib_sum(n, 4, kernel_bernoulli_weight(4), normalized=False)),
            (sigma6_closed(n), fib_sum(n, 6, kernel_bernoulli_weight(6), normalized=False)),
            (sin4_closed(n), fib_sum(n, 4, kernel_one(), normalized=False)),
            (cos2sin4_closed(n), fib_sum(n, 4, kernel_trig([0, 1]), normalized=False)),
        ]
        for exact, approx in pairs:
            assert approx == pytest.approx(float(exact), rel=1e-10)


def test_reciprocity_checks_on_small_pairs():
    for b, c in [(1, 2), (2, 3), (3, 4), (5, 8), (8, 13), (7, 25)]:
        assert apostol_check(b, c)
        assert hwz_check(b, c)
    with pytest.raises(ValueError):
        apostol_check(2, 4)
    with pytest.raises(ValueError):
        hwz_check(6, 9)

"""Generalized Dedekind sums and exact closed forms of Fibonacci sums.

The central object is

    s_{l,m}(a, b; c) = sum_{k=0}^{c-1} B_l({a k / c}) B_m({b k / c}),

an exact rational.  For consecutive Fibonacci moduli the (2,2) and
(1,3) sums have closed forms in Fibonacci and Lucas numbers, and via
the DFT identity for even potentials those closed forms lift to the
trigonometric sums over the Fibonacci lattice (sigma2/sigma4/sigma6 and
the 1/sin^4 and cos^2/sin^4 variants).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .golden import fib, lucas
from .kernels import bernoulli_poly_coeffs

__all__ = [
    "DedekindSumSpec",
    "gen_dedekind_sum",
    "s22_closed",
    "s13_closed",
    "s22_from_trig_sum",
    "sigma2_closed",
    "sigma2_closed_abstract",
    "sigma4_closed",
    "sigma6_closed",
    "sin4_closed",
    "cos2sin4_closed",
    "apostol_check",
    "hwz_check",
]


@dataclass(frozen=True)
class DedekindSumSpec:
    """Parameters of s_{ell,m}(a, b; c)."""

    ell: int
    m: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.ell < 0 or self.m < 0:
            raise ValueError(f"polynomial degrees must be >= 0, got ({self.ell}, {self.m})")
        if self.c < 1:
            raise ValueError(f"modulus must be >= 1, got {self.c}")

    def value(self) -> Fraction:
        return gen_dedekind_sum(self.ell, self.m, self.a, self.b, self.c)


def _int_poly_coeffs(m: int, c: int) -> tuple[list[int], int]:
    """Integer coefficients (descending powers) and denominator d so that
    B_m(r/c) = P(r) / (d * c**m) for integer r."""
    coeffs = bernoulli_poly_coeffs(m)
    d = 1
    for q in coeffs:
        d = d * q.denominator // math.gcd(d, q.denominator)
    desc = []
    for j in range(m, -1, -1):
        q = coeffs[j]
        desc.append(q.numerator * (d // q.denominator) * c ** (m - j))
    return desc, d


def gen_dedekind_sum(ell: int, m: int, a: int, b: int, c: int) -> Fraction:
    """s_{ell,m}(a, b; c), exact.

    Runs in O(c) integer operations: each Bernoulli factor is evaluated
    as an integer polynomial over the common denominator.
    """
    spec = DedekindSumSpec(ell, m, a, b, c)
    pa, da = _int_poly_coeffs(spec.ell, c)
    pb, db = _int_poly_coeffs(spec.m, c)
    total = 0
    for k in range(c):
        r = (a * k) % c
        s = (b * k) % c
        va = 0
        for q in pa:
            va = va * r + q
        vb = 0
        for q in pb:
            vb = vb * s + q
        total += va * vb
    return Fraction(total, da * db * c ** (ell + m))


def s22_closed(n: int) -> Fraction:
    """s_{2,2}(1, F_{n-1}; F_n) in closed form, n >= 2.

    Equals n*F_{2n}/(75*F_n^3) - 17*L_{2n}/(4500*F_n^3)
    - (-1)^n * 29/(1125*F_n^3).
    """
    if n < 2:
        raise ValueError(f"level must be >= 2, got {n}")
    fn = fib(n)
    sgn = (-1) ** n
    num = (
        Fraction(n * fib(2 * n), 75)
        - Fraction(17 * lucas(2 * n), 4500)
        - Fraction(sgn * 29, 1125)
    )
    return num / fn ** 3


def s13_closed(n: int) -> Fraction:
    """s_{1,3}(1, F_{n-1}; F_n) in closed form, n >= 2.

    Equals L_{3n}/(1500*F_n^3) + (-1)^n*n/(50*F_n^2)
    - (-1)^n*13*L_n/(750*F_n^3); also (-1)^n times the (3,1) sum.
    """
    if n < 2:
        raise ValueError(f"level must be >= 2, got {n}")
    fn = fib(n)
    sgn = (-1) ** n
    return (
        Fraction(lucas(3 * n), 1500 * fn ** 3)
        + Fraction(sgn * n, 50 * fn * fn)
        - Fraction(sgn * 13 * lucas(n), 750 * fn ** 3)
    )


def sigma2_closed(n: int) -> Fraction:
    """sum_{m=1}^{F_n - 1} 1/(sin(pi m/F_n)^2 sin(pi F_{n-1} m/F_n)^2)
    in closed form, n >= 2 (the n = 2 sum is empty and the value 0)."""
    if n < 2:
        raise ValueError(f"level must be >= 2, got {n}")
    sgn = (-1) ** n
    return (
        Fraction(4 * n * fib(2 * n), 75)
        - Fraction(17 * lucas(2 * n), 1125)
        - Fraction(sgn * 116, 1125)
        - Fraction(1, 9)
    )


def sigma2_closed_abstract(n: int) -> Fraction:
    """The same sum written with F_n^2 in place of L_{2n}:
    4n/75 * F_{2n} - 17/225 * F_n^2 - (-1)^n * 2/15 - 1/9."""
    if n < 2:
        raise ValueError(f"level must be >= 2, got {n}")
    sgn = (-1) ** n
    return (
        Fraction(4 * n * fib(2 * n), 75)
        - Fraction(17 * fib(n) ** 2, 225)
        - Fraction(sgn * 2, 15)
        - Fraction(1, 9)
    )


def s22_from_trig_sum(n: int) -> Fraction:
    """Bridge between the trigonometric and the Bernoulli closed forms:
    s_{2,2}(1, F_{n-1}; F_n) = (sigma2_closed(n) + 1/9) / (4 F_n^3).

    The 1/9 absorbs the constant DFT coefficient; at n = 2 it alone
    produces the value 1/36 of the one-term Bernoulli sum while the
    trigonometric sum is empty.
    """
    return (sigma2_closed(n) + Fraction(1, 9)) / (4 * fib(n) ** 3)


def sigma4_closed(n: int) -> Fraction:
    """Closed form of the sum with (2 + 4cos^2)/sin^4 factors on both
    arguments of the Fibonacci lattice, n >= 2."""
    if n < 2:
        raise ValueError(f"level must be >= 2, got {n}")
    sgn = (-1) ** n
    return (
        Fraction(32 * n * fib(4 * n), 1875)
        - Fraction(196 * lucas(4 * n), 28125)
        + Fraction(sgn * 256 * n * fib(2 * n), 1875)
        - Fraction(sgn * 3776 * lucas(2 * n), 28125)
        - Fraction(7556, 28125)
    )


def sigma6_closed(n: int) -> Fraction:
    """Closed form of the sum with (16 + 88cos^2 + 16cos^4)/sin^6 factors
    on both arguments, n >= 2."""
    if n < 2:
        raise ValueError(f"level must be >= 2, got {n}")
    sgn = (-1) ** n
    return (
        Fraction(68608 * n * fib(6 * n), 984375)
        + Fraction(59606528 * lucas(6 * n), 20155078125)
        + Fraction(sgn * 548864 * n * fib(4 * n), 328125)
        - Fraction(sgn * 2876091392 * lucas(4 * n), 2239453125)
        + Fraction(68608 * n * fib(2 * n), 13125)
        - Fraction(128925952 * lucas(2 * n), 17915625)
        - sgn * (Fraction(1909649408, 161240625) + Fraction(sgn * 256, 3969))
    )


def sin4_closed(n: int) -> Fraction:
    """Closed form of sum 1/(sin^4 sin^4) over the Fibonacci lattice."""
    if n < 2:
        raise ValueError(f"level must be >= 2, got {n}")
    sgn = (-1) ** n
    return (
        Fraction(8 * n * fib(4 * n), 16875)
        + Fraction(2357 * lucas(4 * n), 1771875)
        + (Fraction(16, 675) + Fraction(sgn * 64, 16875)) * n * fib(2 * n)
        - (Fraction(676, 70875) + Fraction(sgn * 7408, 1771875)) * lucas(2 * n)
        - (Fraction(147023, 1771875) + Fraction(sgn * 1616, 23625))
    )


def cos2sin4_closed(n: int) -> Fraction:
    """Closed form of sum cos^2 cos^2/(sin^4 sin^4) over the lattice."""
    if n < 2:
        raise ValueError(f"level must be >= 2, got {n}")
    sgn = (-1) ** n
    return (
        Fraction(8 * n * fib(4 * n), 16875)
        - Fraction(1693 * lucas(4 * n), 1771875)
        + (Fraction(4, 675) + Fraction(sgn * 64, 16875)) * n * fib(2 * n)
        - (Fraction(19, 70875) + Fraction(sgn * 6208, 1771875)) * lucas(2 * n)
        - (Fraction(11948, 1771875) + Fraction(sgn * 4, 23625))
    )


def apostol_check(b: int, c: int) -> bool:
    """Reciprocity for the (1,3) sums, exact:

    4*(b*c^3*s_{1,3}(1,b;c) + b^3*c*s_{1,3}(1,c;b))
        = -1/10 - (b^4 - 5 b^2 c^2 + c^4)/30.

    Requires gcd(b, c) = 1.
    """
    if math.gcd(b, c) != 1:
        raise ValueError(f"arguments must be coprime, got ({b}, {c})")
    lhs = 4 * (
        b * c ** 3 * gen_dedekind_sum(1, 3, 1, b, c)
        + b ** 3 * c * gen_dedekind_sum(1, 3, 1, c, b)
    )
    rhs = Fraction(-1, 10) - Fraction(b ** 4 - 5 * b * b * c * c + c ** 4, 30)
    return lhs == rhs


def hwz_check(b: int, c: int) -> bool:
    """The (2,2)-to-(3,1)/(1,3) reciprocity, exact:

    s_{2,2}(1,b;c)/(4b) = (s_{3,1}(1,b;c) + s_{3,1}(1,c;b))/6
        + s_{1,3}(1,b;c)/(6 b^2) + 1/(720 b^3 c^3) + b/(720 c^3)
        + c/(240 b^3).

    Requires gcd(b, c) = 1.
    """
    if math.gcd(b, c) != 1:
        raise ValueError(f"arguments must be coprime, got ({b}, {c})")
    lhs = gen_dedekind_sum(2, 2, 1, b, c) / (4 * b)
    rhs = (
        (gen_dedekind_sum(3, 1, 1, b, c) + gen_dedekind_sum(3, 1, 1, c, b))
        / 6
        + gen_dedekind_sum(1, 3, 1, b, c) / (6 * b * b)
        + Fraction(1, 720 * b ** 3 * c ** 3)
        + Fraction(b, 720 * c ** 3)
        + Fraction(c, 240 * b ** 3)
    )
    return lhs == rhs

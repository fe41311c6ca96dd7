"""Independent reference computations used only by the tests.

None of these go through the library's recurrence, convolution or
derivative-based expansion code.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import sympy

from frobenius_euler.arith import LPoly, LRat
from frobenius_euler.xpoly import XPoly

LAM, X, T = sympy.symbols("lambda x t")


def bernoulli_numbers(m: int) -> list[Fraction]:
    """B_0..B_m (B_1 = -1/2) from Σ_{k=0}^{j} C(j+1, k) B_k = 0."""
    b = [Fraction(1)]
    for j in range(1, m + 1):
        s = sum(math.comb(j + 1, k) * b[k] for k in range(j))
        b.append(-s / (j + 1))
    return b


def euler_value_at_zero(n: int) -> Fraction:
    """E_n(0) = -2 (2^(n+1) - 1) B_(n+1) / (n + 1)."""
    b = bernoulli_numbers(n + 1)
    return -2 * (2 ** (n + 1) - 1) * b[n + 1] / (n + 1)


def lrat_to_sympy(f: LRat):
    num = sum(sympy.Rational(c.numerator, c.denominator) * LAM**i for i, c in enumerate(f.num.coeffs))
    den = sum(sympy.Rational(c.numerator, c.denominator) * LAM**i for i, c in enumerate(f.den.coeffs))
    return num / den


def xpoly_to_sympy(p: XPoly):
    return sum(lrat_to_sympy(c) * X**i for i, c in enumerate(p.coeffs))


def sympy_fe_polys(N: int, r: int = 1) -> list:
    """n! [t^n] ((1-λ)/(e^t-λ))^r e^{xt} for n = 0..N, by sympy's own series expansion."""
    gen = ((1 - LAM) / (sympy.exp(T) - LAM)) ** r * sympy.exp(X * T)
    ser = sympy.series(gen, T, 0, N + 1).removeO()
    return [sympy.factorial(n) * ser.coeff(T, n) for n in range(N + 1)]


def sympy_equal(a, b) -> bool:
    return sympy.cancel(sympy.together(a - b)) == 0


def multinomial_higher_number(n: int, r: int, numbers: list[LRat]) -> LRat:
    """H_n^(r) by enumerating compositions n_1 + ... + n_r = n (exponential work)."""
    total = LRat(0)
    for comp in itertools.product(range(n + 1), repeat=r):
        if sum(comp) != n:
            continue
        coef = math.factorial(n)
        term = LRat(1)
        for part in comp:
            coef //= math.factorial(part)
            term = term * numbers[part]
        total = total + term * coef
    return total


def expand_by_elimination(p: XPoly, basis: list[XPoly]) -> list[LRat]:
    """Coefficients of p in a monic triangular basis by back substitution."""
    rest = p
    coeffs = [LRat(0)] * len(basis)
    for k in range(len(basis) - 1, -1, -1):
        c = rest.coeff(k)
        coeffs[k] = c
        rest = rest - basis[k].scale(c)
    assert rest.is_zero()
    return coeffs

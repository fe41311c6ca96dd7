"""Shared generators for random exact values."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from frobenius_euler.arith import LPoly, LRat
from frobenius_euler.xpoly import XPoly

small_rat = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


@st.composite
def lpolys(draw, max_degree=4, nonzero=False):
    coeffs = draw(st.lists(small_rat, min_size=0, max_size=max_degree + 1))
    p = LPoly(coeffs)
    if nonzero and p.is_zero():
        p = LPoly([draw(st.integers(1, 9))])
    return p


@st.composite
def lrats(draw, max_degree=4, nonzero=False):
    num = draw(lpolys(max_degree, nonzero=nonzero))
    den = draw(lpolys(max_degree, nonzero=True))
    return LRat(num, den)


def random_lpoly(rng: random.Random, max_degree: int) -> LPoly:
    deg = rng.randint(0, max_degree)
    return LPoly(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(deg + 1))


def random_lrat(rng: random.Random, max_degree: int = 2) -> LRat:
    den = random_lpoly(rng, max_degree)
    while den.is_zero():
        den = random_lpoly(rng, max_degree)
    return LRat(random_lpoly(rng, max_degree), den)


def random_xpoly(rng: random.Random, max_degree: int = 10, coeff_degree: int = 1) -> XPoly:
    """Seeded random polynomial in x whose coefficients are small rational functions of λ."""
    deg = rng.randint(0, max_degree)
    coeffs = [random_lrat(rng, coeff_degree) for _ in range(deg)]
    lead = random_lrat(rng, coeff_degree)
    while lead.is_zero():
        lead = random_lrat(rng, coeff_degree)
    return XPoly(coeffs + [lead])

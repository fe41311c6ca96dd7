"""
Frobenius-Euler numbers and polynomials
=======================================

Everything here is exact: values live in Q(λ), the field of rational
functions in λ, and polynomials have coefficients in Q(λ).
"""

from fractions import Fraction

from frobenius_euler import fe_number, fe_number_higher, fe_numbers_via_series, fe_poly, fe_poly_higher
from frobenius_euler.render import render_lrat, render_xpoly

# The first few numbers, by the binomial recurrence
for n in range(6):
    print(f"H_{n}(λ) =", render_lrat(fe_number(n)))

# The same numbers from the reciprocal of the generating series
series = fe_numbers_via_series(12)
print("recurrence and series agree up to n = 12:", all(fe_number(n) == series[n] for n in range(13)))

# At λ = -1 the numbers reduce to the Euler values E_n(0)
print("λ = -1:", [str(fe_number(n).eval_at(-1)) for n in range(7)])

# Polynomials are monic of degree n
for n in range(4):
    print(f"H_{n}(x|λ) =", render_xpoly(fe_poly(n)))

# LaTeX output, ready to paste
print(render_xpoly(fe_poly(2), "latex"))

# Higher order: order 0 gives x^n back, order 2 is a convolution of order 1
print("H_3^(0) =", render_xpoly(fe_poly_higher(3, 0)))
print("H_2^(2) =", render_xpoly(fe_poly_higher(2, 2)))
print("H_2^(2)(λ) =", render_lrat(fe_number_higher(2, 2)))

# Exact evaluation at a rational point
print("H_3(1/2 | 3) =", fe_poly(3).eval_at(3, Fraction(1, 2)))

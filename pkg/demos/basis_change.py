"""
Changing basis
==============

Any polynomial of degree n over Q(λ) is a unique combination of the
Frobenius-Euler polynomials of a fixed order.  The coefficients come from
derivative values of the polynomial at the integers 0..r.
"""

from frobenius_euler import XPoly, fe_change_order, fe_poly, from_fe_basis, to_fe_basis, to_fe_basis_higher
from frobenius_euler.basis import to_fe_basis_higher_sum
from frobenius_euler.render import parse_xpoly, render_lrat

# x in the order-1 basis
e = to_fe_basis(XPoly.x())
print([render_lrat(c) for c in e.coeffs])

# polynomials can be read from text; coefficients may depend on λ
p = parse_xpoly("x^3 - λ x + 1/(λ+2)")
for r in (1, 2, 3):
    e = to_fe_basis_higher(p, r)
    print(f"order {r}:", [render_lrat(c) for c in e.coeffs])
    # the two coefficient formulas agree and the expansion sums back to p
    assert to_fe_basis_higher_sum(p, r) == e
    assert from_fe_basis(e) == p

# a basis element expands to a unit vector
print([render_lrat(c) for c in to_fe_basis(fe_poly(4)).coeffs])

# H_n in the order-r basis has a closed form; compare with the generic route
closed = fe_change_order(3, 2)
print(closed == to_fe_basis_higher(fe_poly(3), 2))

"""
Checking identities
===================

Each registered identity is a pair of sides in Q(λ)[x].  An instance holds
exactly when the residual LHS - RHS is the zero polynomial.  A seeded random
screen at rational points is available as quick, one-sided evidence.
"""

from frobenius_euler.identities import registry_list
from frobenius_euler.render import render_lrat, render_xpoly
from frobenius_euler.verify import random_screen, summary_document, verify_all, verify_identity

for ident in registry_list():
    print(f"{ident.id:<17} {ident.statement}")

# a single instance
rep = verify_identity("thm2", 5)
print(rep.id, rep.n, rep.status)

# a refuted instance carries its residual and the coefficients that would be right
rep = verify_identity("thm7-as-printed", 0, 2)
print(rep.status, "residual:", render_xpoly(rep.residual))
print("corrected coefficients:", [render_lrat(c) for c in rep.corrected_coefficients.coeffs])

# random screen: a disagreement is a counterexample
print(random_screen("thm5-as-printed", 2, 2, seed=7).to_json())

# the whole registry over a small grid
_, rows = verify_all(n_max=5, r_max=3, screen_seed=1)
doc = summary_document(rows, 5, 3, 1)
for row in doc["identities"]:
    ce = row["first_counterexample"]
    where = "" if ce is None else f"  (first at n={ce['n']}" + ("" if ce["r"] is None else f", r={ce['r']}") + ")"
    print(f"{row['id']:<17} {row['verdict']}{where}")
print("authoritative variants all verified:", doc["authoritative_verified"])

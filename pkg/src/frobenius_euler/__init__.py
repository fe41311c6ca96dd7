"""Exact Frobenius-Euler numbers and polynomials over Q(λ), basis changes, and an identity checker."""

from .arith import LAMBDA, LPoly, LRat, LSeries, PoleError, lpoly_gcd, series_product_power, series_reciprocal
from .basis import (
    FEExpansion,
    fe_change_order,
    from_fe_basis,
    to_fe_basis,
    to_fe_basis_higher,
    to_fe_basis_higher_sum,
)
from .frobenius import (
    FECache,
    fe_number,
    fe_number_higher,
    fe_numbers_via_series,
    fe_poly,
    fe_poly_higher,
)
from .identities import registry_list
from .render import parse_lrat, parse_xpoly, render_lrat, render_xpoly
from .verify import (
    IdentityReport,
    UnknownIdentityError,
    oracle_expansion,
    random_screen,
    verify_all,
    verify_identity,
    verify_range,
)
from .xpoly import (
    XPoly,
    delta_lambda,
    delta_lambda_iter,
    eval_at_integer,
    integral_01,
    poly_derivative,
    poly_invert_lambda,
    poly_shift,
)

__version__ = "0.1.0"

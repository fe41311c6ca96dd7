"""Registry of Frobenius-Euler identities as pairs of side builders.

Each identity maps concrete parameters (n, and r for the higher-order ones) to
two polynomials in Q(λ)[x].  Both sides are assembled from the primitives in
:mod:`frobenius_euler.frobenius` and :mod:`frobenius_euler.xpoly`; no side is
simplified with the identity it belongs to.

Several published closed forms do not survive an exact check.  Those appear
twice: once exactly as printed, and once with coefficients re-derived from
derivative data (the "corrected" variant).  Where a correction is needed:

* convolution identities (thm3, thm4): the terms that do not depend on the
  inner summation index appear once, outside the inner sum, and the top
  coefficient of thm4 is 2^n/n!;
* thm5: the factor 1/(1-λ)^r is applied once, not twice;
* thm7: there is no 1/(1-λ)^2 prefactor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .arith import LAMBDA, ONE, LRat, lrat_sum
from .combinat import binomial, factorial, falling
from .frobenius import fe_number, fe_number_higher, fe_poly, fe_poly_higher
from .xpoly import (
    XPoly,
    delta_lambda,
    eval_at_integer,
    integral_01,
    linear_combination,
    poly_derivative,
    poly_invert_lambda,
)

AS_PRINTED = "as-printed"
CORRECTED = "corrected"

Builder = Callable[[int, Optional[int]], XPoly]


@dataclass(frozen=True)
class Identity:
    """One registered identity LHS(n, r) = RHS(n, r).

    ``expansion_order`` gives the Frobenius-Euler basis order in which a
    corrected right-hand side is expressed, or None when the identity is not an
    expansion in such a basis.  ``authoritative`` marks the variant whose
    verdict counts as the library's answer for its family.
    """

    id: str
    family: str
    variant: str
    statement: str
    lhs: Builder
    rhs: Builder
    uses_r: bool = False
    r_min: int = 1
    n_min: int = 0
    expansion_order: Optional[Callable[[int, Optional[int]], int]] = None
    authoritative: bool = True

    def build(self, n: int, r: Optional[int] = None) -> tuple[XPoly, XPoly]:
        return self.lhs(n, r), self.rhs(n, r)


def _const(c) -> XPoly:
    return XPoly.constant(c)


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def _expand(coeffs: list[LRat], order: int) -> XPoly:
    return linear_combination(coeffs, [fe_poly_higher(k, order) for k in range(len(coeffs))])


def _inv_one_minus_lambda_pow(r: int) -> LRat:
    return ((1 - LAMBDA) ** r).inverse()


def _conv(n: int, k: int, weighted: bool) -> LRat:
    """Σ_{l=k}^n H_{l-k} H_{n-l}, optionally weighted by 1/((l-k)!(n-l)!)."""
    terms = []
    for l in range(k, n + 1):
        t = fe_number(l - k) * fe_number(n - l)
        if weighted:
            t = t * Fraction(1, factorial(l - k) * factorial(n - l))
        terms.append(t)
    return lrat_sum(terms)


# ---------------------------------------------------------- closed forms


def thm3_coefficients(n: int, variant: str = CORRECTED) -> list[LRat]:
    """Coefficients b_k of (1/(n+1)) Σ_k H_k(x) H_{n-k}(x) in the plain basis."""
    out = []
    for k in range(n):
        scale = Fraction(binomial(n, k), n - k + 1)
        inner = -LAMBDA * _conv(n, k, weighted=False)
        if variant == CORRECTED:
            inner = inner + 2 * LAMBDA * fe_number(n - k)
        else:
            # printed form keeps 2λH_{n-k} inside the l-sum
            inner = inner + 2 * LAMBDA * fe_number(n - k) * (n - k + 1)
        out.append(inner * scale)
    out.append(ONE)
    return out


def thm4_coefficients(n: int, variant: str = CORRECTED) -> list[LRat]:
    """Coefficients b_k of Σ_k H_k(x) H_{n-k}(x) / (k!(n-k)!) in the plain basis."""
    out = []
    for k in range(n):
        if variant == CORRECTED:
            inner = -LAMBDA * _conv(n, k, weighted=True) + 2 * LAMBDA * fe_number(n - k) * Fraction(
                1, factorial(n - k)
            )
            out.append(inner * Fraction(2**k, factorial(k)))
        else:
            conv = LAMBDA * (LAMBDA - 1) * _conv(n, k, weighted=True)
            delta_term = 2 * LAMBDA * (1 - LAMBDA) * fe_number(n - k) * Fraction(1, factorial(n - k))
            inner = conv + delta_term * (n - k + 1)
            out.append(inner * Fraction(2**k, 2 * factorial(k)))
    if variant == CORRECTED:
        out.append(LRat(Fraction(2**n, factorial(n))))
    else:
        out.append((1 - LAMBDA) * Fraction(2**n, 2 * factorial(n)))
    return out


def thm5_coefficients(n: int, r: int, variant: str = CORRECTED) -> list[LRat]:
    """Order-r coefficients of x^n from the finite sum over D^k x^n at j = 0..r.

    The printed statement multiplies the expansion by a second 1/(1-λ)^r.
    """
    scale = _inv_one_minus_lambda_pow(r)
    if variant == AS_PRINTED:
        scale = scale * scale
    out = []
    for k in range(n + 1):
        # D^k x^n at x = j, with 0^0 = 1
        s = lrat_sum(
            (-LAMBDA) ** (r - j) * (binomial(r, j) * falling(n, k) * j ** (n - k)) for j in range(r + 1)
        )
        out.append(s * scale * Fraction(1, factorial(k)))
    return out


def thm6_coefficients(n: int, r: int) -> list[LRat]:
    scale = _inv_one_minus_lambda_pow(r)
    out = []
    for k in range(n + 1):
        h = fe_poly(n - k)
        s = lrat_sum((-LAMBDA) ** (r - j) * binomial(r, j) * eval_at_integer(h, j) for j in range(r + 1))
        out.append(s * scale * binomial(n, k))
    return out


def thm7_coefficients(n: int, r: int, variant: str = CORRECTED) -> list[LRat]:
    """Plain-basis coefficients of H_n^(r)(x|λ): C(n, k) H_{n-k}^(r-1)(λ)."""
    out = [fe_number_higher(n - k, r - 1) * binomial(n, k) for k in range(n + 1)]
    if variant == AS_PRINTED:
        pref = _inv_one_minus_lambda_pow(2)
        out = [c * pref for c in out]
    return out


# ---------------------------------------------------------- side builders


def _thm2_lhs(n, r):
    return poly_invert_lambda(fe_poly(n)).scale(LAMBDA) + fe_poly(n)


def _thm2_rhs(n, r):
    coeffs = [fe_number(n - k).invert_lambda() * binomial(n, k) for k in range(n + 1)]
    return _expand(coeffs, 1).scale(1 + LAMBDA)


def _thm3_lhs(n, r):
    total = XPoly()
    for k in range(n + 1):
        total = total + fe_poly(k) * fe_poly(n - k)
    return total.scale(LRat(Fraction(1, n + 1)))


def _thm4_lhs(n, r):
    total = XPoly()
    for k in range(n + 1):
        total = total + (fe_poly(k) * fe_poly(n - k)).scale(LRat(Fraction(1, factorial(k) * factorial(n - k))))
    return total


def _order_one(n, r):
    return 1


def _order_r(n, r):
    return r


def _build_registry() -> dict[str, Identity]:
    lam = LAMBDA
    entries = [
        Identity(
            "eq2",
            "eq2",
            AS_PRINTED,
            "H_n(1|λ) - λ H_n(λ) = (1-λ) δ_{0,n}",
            lambda n, r: _const(eval_at_integer(fe_poly(n), 1) - lam * fe_number(n)),
            lambda n, r: _const((1 - lam) * _delta(n, 0)),
        ),
        Identity(
            "eq5",
            "eq5",
            AS_PRINTED,
            "H_n(x+1|λ) - λ H_n(x|λ) = (1-λ) x^n",
            lambda n, r: delta_lambda(fe_poly(n)),
            lambda n, r: XPoly.monomial(n, 1 - lam),
        ),
        Identity(
            "eq6",
            "eq6",
            AS_PRINTED,
            "d/dx H_n(x|λ) = n H_{n-1}(x|λ)",
            lambda n, r: poly_derivative(fe_poly(n), 1),
            lambda n, r: fe_poly(n - 1).scale(n) if n else XPoly(),
        ),
        Identity(
            "eq7",
            "eq7",
            AS_PRINTED,
            "∫_0^1 H_n(x|λ) dx = (λ-1)/(n+1) H_{n+1}(λ)",
            lambda n, r: _const(integral_01(fe_poly(n))),
            lambda n, r: _const((lam - 1) * fe_number(n + 1) * Fraction(1, n + 1)),
        ),
        Identity(
            "eq30",
            "eq30",
            AS_PRINTED,
            "H_n^(0)(x|λ) = x^n",
            lambda n, r: fe_poly_higher(n, 0),
            lambda n, r: XPoly.monomial(n),
        ),
        Identity(
            "eq31",
            "eq31",
            AS_PRINTED,
            "d/dx H_n^(r)(x|λ) = n H_{n-1}^(r)(x|λ)",
            lambda n, r: poly_derivative(fe_poly_higher(n, r), 1),
            lambda n, r: fe_poly_higher(n - 1, r).scale(n) if n else XPoly(),
            uses_r=True,
            r_min=0,
        ),
        Identity(
            "eq32",
            "eq32",
            AS_PRINTED,
            "H_n^(r)(x+1|λ) - λ H_n^(r)(x|λ) = (1-λ) H_n^(r-1)(x|λ)",
            lambda n, r: delta_lambda(fe_poly_higher(n, r)),
            lambda n, r: fe_poly_higher(n, r - 1).scale(1 - lam),
            uses_r=True,
        ),
        Identity(
            "thm2",
            "thm2",
            AS_PRINTED,
            "λ H_n(x|1/λ) + H_n(x|λ) = (1+λ) Σ_k C(n,k) H_{n-k}(1/λ) H_k(x|λ)",
            _thm2_lhs,
            _thm2_rhs,
            expansion_order=_order_one,
        ),
    ]
    for variant in (AS_PRINTED, CORRECTED):
        entries.append(
            Identity(
                f"thm3-{variant}",
                "thm3",
                variant,
                "(1/(n+1)) Σ_k H_k(x|λ) H_{n-k}(x|λ) = Σ_k b_k H_k(x|λ)",
                _thm3_lhs,
                lambda n, r, v=variant: _expand(thm3_coefficients(n, v), 1),
                expansion_order=_order_one,
                authoritative=variant == CORRECTED,
            )
        )
    for variant in (AS_PRINTED, CORRECTED):
        entries.append(
            Identity(
                f"thm4-{variant}",
                "thm4",
                variant,
                "Σ_k H_k(x|λ) H_{n-k}(x|λ) / (k!(n-k)!) = Σ_k b_k H_k(x|λ)",
                _thm4_lhs,
                lambda n, r, v=variant: _expand(thm4_coefficients(n, v), 1),
                expansion_order=_order_one,
                authoritative=variant == CORRECTED,
            )
        )
    for variant in (AS_PRINTED, CORRECTED):
        entries.append(
            Identity(
                f"thm5-{variant}",
                "thm5",
                variant,
                "x^n = Σ_k C_k H_k^(r)(x|λ), C_k from p^(k)(j), j = 0..r",
                lambda n, r: XPoly.monomial(n),
                lambda n, r, v=variant: _expand(thm5_coefficients(n, r, v), r),
                uses_r=True,
                expansion_order=_order_r,
                authoritative=variant == CORRECTED,
            )
        )
    entries.append(
        Identity(
            "thm6",
            "thm6",
            AS_PRINTED,
            "H_n(x|λ) = (1-λ)^(-r) Σ_k C(n,k) (Σ_j C(r,j) (-λ)^(r-j) H_{n-k}(j|λ)) H_k^(r)(x|λ)",
            lambda n, r: fe_poly(n),
            lambda n, r: _expand(thm6_coefficients(n, r), r),
            uses_r=True,
            expansion_order=_order_r,
        )
    )
    for variant in (AS_PRINTED, CORRECTED):
        entries.append(
            Identity(
                f"thm7-{variant}",
                "thm7",
                variant,
                "H_n^(r)(x|λ) = Σ_k C(n,k) H_{n-k}^(r-1)(λ) H_k(x|λ)"
                + (" / (1-λ)^2" if variant == AS_PRINTED else ""),
                lambda n, r: fe_poly_higher(n, r),
                lambda n, r, v=variant: _expand(thm7_coefficients(n, r, v), 1),
                uses_r=True,
                expansion_order=_order_one,
                authoritative=variant == CORRECTED,
            )
        )
    return {e.id: e for e in entries}


REGISTRY: dict[str, Identity] = _build_registry()


def registry_list() -> list[Identity]:
    """All registered identities, sorted by id."""
    return [REGISTRY[k] for k in sorted(REGISTRY)]

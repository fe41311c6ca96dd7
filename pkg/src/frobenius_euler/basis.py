"""Change of basis between monomials and Frobenius-Euler bases of any order.

For p of degree n the order-r coefficients C_k in p = Σ C_k H_k^(r)(x|λ) are
read off from derivative data, since Δ_λ^r sends H_k^(r) to (1 - λ)^r x^k:

    C_k = D^k(Δ_λ^r p)(0) / ((1 - λ)^r k!)
        = Σ_j C(r, j) (-λ)^(r-j) p^(k)(j) / ((1 - λ)^r k!)

Both forms are implemented; they must agree.  Order 1 is the familiar
b_k = (p^(k)(1) - λ p^(k)(0)) / ((1 - λ) k!).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import LAMBDA, LRat, lrat_sum
from .combinat import binomial, factorial
from .frobenius import fe_poly_higher
from .xpoly import XPoly, delta_lambda_iter, eval_at_integer, linear_combination, poly_derivative


@dataclass(frozen=True)
class FEExpansion:
    """Coefficients of a polynomial in the order-``order`` Frobenius-Euler basis."""

    order: int
    coeffs: tuple[LRat, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("basis order must be nonnegative")
        object.__setattr__(self, "coeffs", tuple(LRat.coerce(c) for c in self.coeffs))

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "FEExpansion":
        try:
            return cls(int(data["order"]), tuple(LRat.from_json(c) for c in data["coeffs"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed FEExpansion document: {data!r}") from exc

    def __add__(self, other: "FEExpansion") -> "FEExpansion":
        if self.order != other.order:
            raise ValueError("cannot add expansions in different bases")
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (LRat(0),) * (n - len(self.coeffs))
        b = other.coeffs + (LRat(0),) * (n - len(other.coeffs))
        return FEExpansion(self.order, tuple(x + y for x, y in zip(a, b)))

    def scale(self, c) -> "FEExpansion":
        return FEExpansion(self.order, tuple(x * c for x in self.coeffs))

    def trimmed(self) -> "FEExpansion":
        """Drop trailing zero coefficients."""
        c = list(self.coeffs)
        while c and c[-1].is_zero():
            c.pop()
        return FEExpansion(self.order, tuple(c))


def _one_minus_lambda_pow_inv(r: int) -> LRat:
    return ((1 - LAMBDA) ** r).inverse()


def to_fe_basis(p: XPoly) -> FEExpansion:
    """Expand p in H_0(x|λ), ..., H_n(x|λ)."""
    inv = (1 - LAMBDA).inverse()
    out = []
    for k in range(p.degree + 1):
        dk = poly_derivative(p, k)
        g = eval_at_integer(dk, 1) - LAMBDA * eval_at_integer(dk, 0)
        out.append(g * inv * Fraction(1, factorial(k)))
    return FEExpansion(1, tuple(out))


def to_fe_basis_higher(p: XPoly, r: int) -> FEExpansion:
    """Expand p in the order-r basis via D^k(Δ_λ^r p)(0) / ((1 - λ)^r k!)."""
    if r < 1:
        raise ValueError("basis order must be at least 1")
    scale = _one_minus_lambda_pow_inv(r)
    g = delta_lambda_iter(p, r)
    out = []
    for k in range(p.degree + 1):
        out.append(eval_at_integer(poly_derivative(g, k), 0) * scale * Fraction(1, factorial(k)))
    return FEExpansion(r, tuple(out))


def to_fe_basis_higher_sum(p: XPoly, r: int) -> FEExpansion:
    """Same expansion as :func:`to_fe_basis_higher`, by the finite sum over p^(k)(j), j = 0..r."""
    if r < 1:
        raise ValueError("basis order must be at least 1")
    scale = _one_minus_lambda_pow_inv(r)
    weights = [(-LAMBDA) ** (r - j) * binomial(r, j) for j in range(r + 1)]
    out = []
    for k in range(p.degree + 1):
        dk = poly_derivative(p, k)
        s = lrat_sum(w * eval_at_integer(dk, j) for j, w in enumerate(weights))
        out.append(s * scale * Fraction(1, factorial(k)))
    return FEExpansion(r, tuple(out))


def from_fe_basis(e: FEExpansion) -> XPoly:
    """Σ coeffs[k] · H_k^(order)(x|λ)."""
    return linear_combination(e.coeffs, [fe_poly_higher(k, e.order) for k in range(len(e.coeffs))])


def fe_change_order(n: int, r: int) -> FEExpansion:
    """Closed-form coefficients of H_n(x|λ) in the order-r basis.

    C_k = C(n, k) Σ_j C(r, j) (-λ)^(r-j) H_{n-k}(j|λ) / (1 - λ)^r.
    """
    if r < 1:
        raise ValueError("basis order must be at least 1")
    scale = _one_minus_lambda_pow_inv(r)
    weights = [(-LAMBDA) ** (r - j) * binomial(r, j) for j in range(r + 1)]
    out = []
    for k in range(n + 1):
        h = fe_poly_higher(n - k, 1)
        s = lrat_sum(w * eval_at_integer(h, j) for j, w in enumerate(weights))
        out.append(s * scale * binomial(n, k))
    return FEExpansion(r, tuple(out))

"""Polynomials in x over Q(λ) and the linear operators acting on them.

The operators here (shift, λ-difference, derivative, unit-interval integral,
evaluation at integers, λ-inversion) are generic; nothing in this module knows
about Frobenius-Euler polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .arith import LAMBDA, ONE, ZERO, LRat, Scalar, lrat_sum
from .combinat import binomial, falling


def _trim(coeffs: Sequence[LRat]) -> tuple[LRat, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


class XPoly:
    """Dense polynomial in x with coefficients in Q(λ); ``coeffs[i]`` multiplies x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([LRat.coerce(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple[LRat, ...]) -> "XPoly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, c) -> "XPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=ONE) -> "XPoly":
        return cls([ZERO] * k + [LRat.coerce(c)])

    @classmethod
    def x(cls) -> "XPoly":
        return cls.monomial(1)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> LRat:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, i: int) -> LRat:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LRat)):
            other = XPoly.constant(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("XPoly", self.coeffs))

    def __repr__(self) -> str:
        from .render import xpoly_text

        return f"XPoly({xpoly_text(self)})"

    def __neg__(self) -> "XPoly":
        return XPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "XPoly":
        if not isinstance(other, XPoly):
            if isinstance(other, (int, Fraction, LRat)):
                other = XPoly.constant(other)
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other) -> "XPoly":
        if not isinstance(other, XPoly):
            if isinstance(other, (int, Fraction, LRat)):
                other = XPoly.constant(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "XPoly":
        return XPoly.constant(other) - self

    def scale(self, c) -> "XPoly":
        c = LRat.coerce(c)
        if c.is_zero():
            return XPoly._raw(())
        if c.is_one():
            return self
        return XPoly._raw(tuple(a * c for a in self.coeffs))

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, (int, Fraction, LRat)):
            return self.scale(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return XPoly._raw(())
        out = []
        for k in range(len(a) + len(b) - 1):
            lo, hi = max(0, k - len(b) + 1), min(k, len(a) - 1)
            out.append(lrat_sum(a[i] * b[k - i] for i in range(lo, hi + 1)))
        return XPoly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "XPoly":
        result = XPoly.constant(ONE)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, value) -> LRat:
        """Horner evaluation at an element of Q(λ) (or an integer/rational)."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def eval_at(self, lam0: Scalar, x0: Scalar) -> Fraction:
        """Exact rational value at (λ, x) = (lam0, x0); raises PoleError at a pole."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c.eval_at(lam0)
        return acc

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "XPoly":
        if not isinstance(data, list):
            raise ValueError("an XPoly document is a JSON array of LRat objects")
        return cls(LRat.from_json(c) for c in data)


def poly_shift(p: XPoly, c: int) -> XPoly:
    """Coefficients of p(x + c)."""
    if c == 0 or not p.coeffs:
        return p
    a = p.coeffs
    n = len(a)
    powers = [c**e for e in range(n)]
    out = []
    for i in range(n):
        out.append(lrat_sum(a[j] * (binomial(j, i) * powers[j - i]) for j in range(i, n) if a[j]))
    return XPoly(out)


def delta_lambda(p: XPoly) -> XPoly:
    """The λ-difference p(x+1) - λ p(x)."""
    return poly_shift(p, 1) - p.scale(LAMBDA)


def delta_lambda_iter(p: XPoly, r: int) -> XPoly:
    for _ in range(r):
        p = delta_lambda(p)
    return p


def poly_derivative(p: XPoly, k: int = 1) -> XPoly:
    """k-th derivative in x."""
    if k == 0:
        return p
    a = p.coeffs
    return XPoly._raw(tuple(a[j] * falling(j, k) for j in range(k, len(a))))


def integral_01(p: XPoly) -> LRat:
    """Definite integral of p over [0, 1]."""
    return lrat_sum(c * Fraction(1, i + 1) for i, c in enumerate(p.coeffs))


def eval_at_integer(p: XPoly, j: int) -> LRat:
    return p(j)


def poly_invert_lambda(p: XPoly) -> XPoly:
    """Apply λ -> 1/λ to every coefficient."""
    return XPoly._raw(tuple(c.invert_lambda() for c in p.coeffs))


def linear_combination(coeffs: Sequence[LRat], polys: Sequence[XPoly]) -> XPoly:
    """Σ coeffs[k]·polys[k], summing coefficient columns so each entry is added once."""
    width = max((len(q.coeffs) for q in polys), default=0)
    out = []
    for i in range(width):
        out.append(lrat_sum(c * q.coeffs[i] for c, q in zip(coeffs, polys) if c and i < len(q.coeffs)))
    return XPoly(out)

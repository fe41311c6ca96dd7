"""Frobenius-Euler numbers and polynomials of every order over Q(λ).

Two independent routes produce the numbers H_n(λ):

* the recurrence H_0 = 1, H_n = Σ_{l<n} C(n, l) H_l / (λ - 1) for n >= 1, and
* n! times the t^n coefficient of the reciprocal of (e^t - λ)/(1 - λ).

Order-r numbers are r-fold binomial convolutions of the order-1 sequence.
Polynomials follow from the umbral expansion H_n(x) = Σ_l C(n, l) H_{n-l} x^l.
Results are memoized in an :class:`FECache`; the module-level functions use a
shared default cache.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .arith import LAMBDA, ONE, ZERO, LRat, LSeries, lrat_sum, series_reciprocal
from .combinat import binomial, factorial
from .xpoly import XPoly

_LAMBDA_MINUS_ONE_INV = (LAMBDA - 1).inverse()


class FECache:
    """Memo tables for H_n(λ), H_n^(r)(λ) and the polynomials built from them.

    Tables only ever grow, by the defining recurrence, under a reentrant lock;
    a lookup therefore returns the same canonical value regardless of which
    thread extended the table or in what order.
    """

    def __init__(self):
        self._lock = threading.RLock()
        self._numbers: list[LRat] = [ONE]
        # order r -> [H_0^(r), H_1^(r), ...]; order 1 aliases the plain numbers
        self._higher: dict[int, list[LRat]] = {}
        self._polys: dict[tuple[int, int], XPoly] = {}

    def number(self, n: int) -> LRat:
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n >= len(self._numbers):
            with self._lock:
                h = self._numbers
                while len(h) <= n:
                    m = len(h)
                    acc = lrat_sum(h[l] * binomial(m, l) for l in range(m))
                    h.append(acc * _LAMBDA_MINUS_ONE_INV)
        return self._numbers[n]

    def number_higher(self, n: int, r: int) -> LRat:
        if n < 0 or r < 0:
            raise ValueError("n and r must be nonnegative")
        if r == 0:
            return ONE if n == 0 else ZERO
        if r == 1:
            return self.number(n)
        table = self._higher.get(r)
        if table is None or len(table) <= n:
            with self._lock:
                table = self._higher.setdefault(r, [])
                while len(table) <= n:
                    m = len(table)
                    # H_m^(r) = Σ_l C(m, l) H_l^(r-1) H_{m-l}
                    table.append(
                        lrat_sum(
                            self.number_higher(l, r - 1) * self.number(m - l) * binomial(m, l)
                            for l in range(m + 1)
                        )
                    )
        return table[n]

    def poly_higher(self, n: int, r: int) -> XPoly:
        key = (n, r)
        p = self._polys.get(key)
        if p is None:
            coeffs = [self.number_higher(n - l, r) * binomial(n, l) for l in range(n + 1)]
            p = XPoly(coeffs)
            with self._lock:
                p = self._polys.setdefault(key, p)
        return p


DEFAULT_CACHE = FECache()


def fe_number(n: int) -> LRat:
    """Frobenius-Euler number H_n(λ)."""
    return DEFAULT_CACHE.number(n)


def fe_number_higher(n: int, r: int) -> LRat:
    """Frobenius-Euler number of order r, H_n^(r)(λ); order 0 gives the Kronecker delta at n = 0."""
    return DEFAULT_CACHE.number_higher(n, r)


def fe_poly(n: int) -> XPoly:
    """Frobenius-Euler polynomial H_n(x|λ), monic of degree n."""
    return DEFAULT_CACHE.poly_higher(n, 1)


def fe_poly_higher(n: int, r: int) -> XPoly:
    """Order-r Frobenius-Euler polynomial H_n^(r)(x|λ); order 0 is x^n."""
    return DEFAULT_CACHE.poly_higher(n, r)


def generating_denominator_series(order: int) -> LSeries:
    """(e^t - λ)/(1 - λ) truncated at t^order: 1 + Σ_{k>=1} t^k / (k! (1 - λ))."""
    inv = (1 - LAMBDA).inverse()
    return LSeries([ONE] + [inv * Fraction(1, factorial(k)) for k in range(1, order + 1)])


def fe_kernel_series(order: int) -> LSeries:
    """(1 - λ)/(e^t - λ) truncated at t^order."""
    return series_reciprocal(generating_denominator_series(order))


def fe_numbers_via_series(N: int) -> list[LRat]:
    """H_0(λ), ..., H_N(λ) read off the generating function (independent of the recurrence)."""
    kernel = fe_kernel_series(N)
    return [c * factorial(n) for n, c in enumerate(kernel.coeffs)]

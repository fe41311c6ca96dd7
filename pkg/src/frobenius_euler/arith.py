"""Exact arithmetic over Q, Q[λ], the field Q(λ) and truncated series over Q(λ).

Scalars are :class:`fractions.Fraction`.  Polynomials in λ are dense tuples of
Fractions in ascending degree with trailing zeros trimmed, so the zero
polynomial is the empty tuple.  Elements of Q(λ) are kept in canonical form:
reduced, with a monic denominator.  Two canonical values are equal exactly
when their components are equal, which is what the identity verifier relies on.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rat_to_str(q: Fraction) -> str:
    """Serialize a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_from_str(s: str) -> Fraction:
    return Fraction(s.strip())


class LPoly:
    """Dense polynomial in λ with rational coefficients (index i is the λ^i coefficient)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([_frac(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "LPoly":
        # coeffs already trimmed Fractions
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "LPoly":
        return cls((c,))

    @classmethod
    def lam(cls) -> "LPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, LPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == LPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("LPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"LPoly([{', '.join(rat_to_str(c) for c in self.coeffs)}])"

    def __neg__(self) -> "LPoly":
        return LPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other: "LPoly") -> "LPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LPoly._raw(_trim(out))

    def __sub__(self, other: "LPoly") -> "LPoly":
        return self + (-other)

    def __mul__(self, other: "LPoly") -> "LPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LPoly._raw(())
        if len(b) == 1:
            return self.scale(b[0])
        if len(a) == 1:
            return other.scale(a[0])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return LPoly._raw(_trim(out))

    def scale(self, c: Scalar) -> "LPoly":
        if not c:
            return LPoly._raw(())
        return LPoly._raw(tuple(x * c for x in self.coeffs))

    def shift_degree(self, k: int) -> "LPoly":
        """Multiply by λ^k."""
        if not self.coeffs or k == 0:
            return self
        return LPoly._raw((Fraction(0),) * k + self.coeffs)

    def __pow__(self, k: int) -> "LPoly":
        result = LPoly._raw((Fraction(1),))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "LPoly") -> tuple["LPoly", "LPoly"]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return LPoly._raw(()), self
        inv_lead = 1 / other.coeffs[-1]
        quot = [Fraction(0)] * (len(rem) - db)
        b = other.coeffs
        for i in range(len(rem) - 1 - db, -1, -1):
            q = rem[i + db] * inv_lead
            quot[i] = q
            if q:
                for j in range(db + 1):
                    rem[i + j] -= q * b[j]
        return LPoly._raw(_trim(quot)), LPoly._raw(_trim(rem[:db]))

    def __floordiv__(self, other: "LPoly") -> "LPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "LPoly") -> "LPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "LPoly") -> "LPoly":
        q, r = self.divmod(other)
        if r.coeffs:
            raise ArithmeticError(f"{other!r} does not divide {self!r}")
        return q

    def monic(self) -> "LPoly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(1 / self.coeffs[-1])

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reversed(self, degree: int | None = None) -> "LPoly":
        """Coefficients reversed with respect to ``degree`` (default: own degree), i.e. λ^d·p(1/λ)."""
        d = self.degree if degree is None else degree
        padded = list(self.coeffs) + [Fraction(0)] * (d + 1 - len(self.coeffs))
        return LPoly._raw(_trim(padded[::-1]))

    def to_json(self) -> list[str]:
        return [rat_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "LPoly":
        return cls(rat_from_str(s) if isinstance(s, str) else s for s in data)


_ZERO = LPoly._raw(())
_ONE = LPoly._raw((Fraction(1),))


def _primitive_int(coeffs) -> list[int]:
    """Integer polynomial with content 1 and positive leading coefficient, proportional to coeffs."""
    m = 1
    for c in coeffs:
        m = m * c.denominator // math.gcd(m, c.denominator) if isinstance(c, Fraction) else m
    ints = [int(c * m) for c in coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for j in range(db + 1):
            a[shift + j] -= la * b[j]
        while a and a[-1] == 0:
            a.pop()
    return a


def lpoly_gcd(a: LPoly, b: LPoly) -> LPoly:
    """Monic greatest common divisor; gcd(0, 0) = 0.

    Euclid's algorithm run on primitive integer polynomials (primitive
    pseudo-remainder sequence), which keeps coefficient growth in check.
    """
    if not b.coeffs:
        return a.monic()
    if not a.coeffs:
        return b.monic()
    if len(a.coeffs) == 1 or len(b.coeffs) == 1:
        return _ONE
    x, y = _primitive_int(a.coeffs), _primitive_int(b.coeffs)
    if len(x) < len(y):
        x, y = y, x
    while len(y) > 1:
        r = _pseudo_rem(x, y)
        if not r:
            x = y
            break
        x, y = y, _primitive_int(r)
    else:
        return _ONE
    lead = x[-1]
    return LPoly._raw(tuple(Fraction(c, lead) for c in x))


class LRat:
    """Element of Q(λ) in canonical form (reduced, monic denominator)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if not isinstance(num, LPoly):
            num = LPoly.constant(num) if isinstance(num, (int, Fraction)) else LPoly(num)
        if den is None:
            den = _ONE
        elif not isinstance(den, LPoly):
            den = LPoly.constant(den) if isinstance(den, (int, Fraction)) else LPoly(den)
        if not den.coeffs:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.coeffs:
            self._set(_ZERO, _ONE)
            return
        g = lpoly_gcd(num, den)
        if g.coeffs != (1,):
            num = num.exact_div(g)
            den = den.exact_div(g)
        self._set(*_make_monic(num, den))

    def _set(self, num: LPoly, den: LPoly) -> None:
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: LPoly, den: LPoly) -> "LRat":
        # caller guarantees canonical form
        r = object.__new__(cls)
        r._set(num, den)
        return r

    @classmethod
    def coerce(cls, value) -> "LRat":
        if isinstance(value, LRat):
            return value
        if isinstance(value, (int, Fraction)):
            return cls._raw(LPoly.constant(value), _ONE)
        if isinstance(value, LPoly):
            return cls._raw(value, _ONE)
        raise TypeError(f"cannot coerce {type(value).__name__} into Q(λ)")

    @classmethod
    def lam(cls) -> "LRat":
        return cls._raw(LPoly.lam(), _ONE)

    def normalize(self) -> "LRat":
        """Re-run canonicalization; a no-op on values built by this module."""
        return LRat(self.num, self.den)

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def is_one(self) -> bool:
        return self.num.coeffs == (1,) and self.den.coeffs == (1,)

    def is_constant(self) -> bool:
        return len(self.num.coeffs) <= 1 and len(self.den.coeffs) == 1

    def __bool__(self) -> bool:
        return bool(self.num.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LPoly)):
            other = LRat.coerce(other)
        if not isinstance(other, LRat):
            return NotImplemented
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("LRat", self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self) -> str:
        from .render import lrat_text

        return f"LRat({lrat_text(self)})"

    def __neg__(self) -> "LRat":
        return LRat._raw(-self.num, self.den)

    def __add__(self, other) -> "LRat":
        if not isinstance(other, LRat):
            try:
                other = LRat.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.num.coeffs:
            return self
        if not self.num.coeffs:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.coeffs == d.coeffs:
            t = a + c
            if not t.coeffs:
                return LRat._raw(_ZERO, _ONE)
            if len(b.coeffs) == 1:
                return LRat._raw(t, b)
            g = lpoly_gcd(t, b)
            if g.coeffs == (1,):
                return LRat._raw(t, b)
            return LRat._raw(*_make_monic(t.exact_div(g), b.exact_div(g)))
        g = lpoly_gcd(b, d)
        if g.coeffs == (1,):
            # coprime denominators: the cross sum is already reduced
            return LRat._raw(*_make_monic(a * d + c * b, b * d))
        bs = b.exact_div(g)
        ds = d.exact_div(g)
        t = a * ds + c * bs
        if not t.coeffs:
            return LRat._raw(_ZERO, _ONE)
        g2 = lpoly_gcd(t, g)
        if g2.coeffs != (1,):
            t = t.exact_div(g2)
            g = g.exact_div(g2)
        return LRat._raw(*_make_monic(t, bs * ds * g))

    __radd__ = __add__

    def __sub__(self, other) -> "LRat":
        if not isinstance(other, LRat):
            try:
                other = LRat.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LRat":
        return LRat.coerce(other) - self

    def __mul__(self, other) -> "LRat":
        if not isinstance(other, LRat):
            if isinstance(other, (int, Fraction)):
                if not other:
                    return LRat._raw(_ZERO, _ONE)
                return LRat._raw(self.num.scale(other), self.den)
            try:
                other = LRat.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.num.coeffs or not other.num.coeffs:
            return LRat._raw(_ZERO, _ONE)
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = lpoly_gcd(a, d) if len(d.coeffs) > 1 else _ONE
        g2 = lpoly_gcd(c, b) if len(b.coeffs) > 1 else _ONE
        if g1.coeffs != (1,):
            a, d = a.exact_div(g1), d.exact_div(g1)
        if g2.coeffs != (1,):
            c, b = c.exact_div(g2), b.exact_div(g2)
        return LRat._raw(*_make_monic(a * c, b * d))

    __rmul__ = __mul__

    def inverse(self) -> "LRat":
        if not self.num.coeffs:
            raise ZeroDivisionError("inverse of zero in Q(λ)")
        return LRat._raw(*_make_monic(self.den, self.num))

    def __truediv__(self, other) -> "LRat":
        if not isinstance(other, LRat):
            try:
                other = LRat.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.num.coeffs:
            raise ZeroDivisionError("division by zero in Q(λ)")
        return self * other.inverse()

    def __rtruediv__(self, other) -> "LRat":
        return LRat.coerce(other) / self

    def __pow__(self, k: int) -> "LRat":
        if k < 0:
            return self.inverse() ** (-k)
        # reduced fractions stay reduced under powers
        return LRat._raw(self.num**k, self.den**k)

    def eval_at(self, lam0: Scalar) -> Fraction:
        """Exact value at λ = lam0; raises :class:`PoleError` at a root of the denominator."""
        d = self.den(lam0)
        if not d:
            raise PoleError(f"denominator vanishes at λ = {lam0}")
        return self.num(lam0) / d

    def invert_lambda(self) -> "LRat":
        """Apply the field automorphism λ -> 1/λ."""
        if not self.num.coeffs:
            return self
        dn, dd = self.num.degree, self.den.degree
        num = self.num.reversed()
        den = self.den.reversed()
        # f(1/λ) = λ^(dd-dn) * rev(num) / rev(den)
        if dd >= dn:
            num = num.shift_degree(dd - dn)
        else:
            den = den.shift_degree(dn - dd)
        return LRat(num, den)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "LRat":
        if isinstance(data, str):
            from .render import parse_lrat

            return parse_lrat(data)
        if isinstance(data, (int, Fraction)):
            return cls.coerce(data)
        try:
            num = LPoly.from_json(data["num"])
            den = LPoly.from_json(data.get("den", ["1"]))
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed LRat document: {data!r}") from exc
        return cls(num, den)


def _make_monic(num: LPoly, den: LPoly) -> tuple[LPoly, LPoly]:
    c = den.coeffs[-1]
    if c == 1:
        return num, den
    inv = 1 / c
    return num.scale(inv), den.scale(inv)


ZERO = LRat._raw(_ZERO, _ONE)
ONE = LRat._raw(_ONE, _ONE)
LAMBDA = LRat.lam()


def lrat_sum(terms: Iterable[LRat]) -> LRat:
    acc = ZERO
    for t in terms:
        acc = acc + t
    return acc


class LSeries:
    """Truncated power series in t over Q(λ): ``coeffs[k]`` multiplies t^k, k = 0..order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(LRat.coerce(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "LSeries":
        return cls([ONE] + [ZERO] * order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("LSeries", self.coeffs))

    def __repr__(self) -> str:
        return f"LSeries({list(self.coeffs)!r})"

    def __mul__(self, other: "LSeries") -> "LSeries":
        """Cauchy product truncated to the smaller order."""
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            out.append(lrat_sum(a[i] * b[k - i] for i in range(k + 1) if a[i] and b[k - i]))
        return LSeries(out)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}


def series_reciprocal(s: LSeries) -> LSeries:
    """Multiplicative inverse modulo t^(order+1)."""
    a = s.coeffs
    if not a[0]:
        raise ZeroDivisionError("constant coefficient of the series is zero")
    inv0 = a[0].inverse()
    out = [inv0]
    for n in range(1, len(a)):
        acc = lrat_sum(a[k] * out[n - k] for k in range(1, n + 1) if a[k])
        out.append(-acc * inv0)
    return LSeries(out)


def series_product_power(s: LSeries, r: int) -> LSeries:
    """r-fold truncated Cauchy power; r = 0 gives the identity series."""
    if r < 0:
        raise ValueError("series power must be nonnegative")
    result = LSeries.one(s.order)
    for _ in range(r):
        result = result * s
    return result

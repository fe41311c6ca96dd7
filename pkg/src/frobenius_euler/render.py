"""Human-readable rendering of Q(λ) and Q(λ)[x] values, and a reader for it.

Conventions, so that golden outputs stay stable:

* λ-polynomials print in descending degree; x-polynomials too.
* Denominators are monic.  A denominator of the shape λ^a (λ + c)^k is printed
  factored, anything else expanded.
* A term whose leading numerator coefficient is negative is printed with a
  minus sign in front of the negated term.

The reader accepts both the text and the LaTeX forms (``\\frac``, ``\\lambda``,
braces, ``\\left``/``\\right``, ``\\cdot``) as well as ``lambda``/``l`` and
implicit multiplication.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .arith import LPoly, LRat, rat_to_str

_LAM_TEXT = "λ"
_LAM_TEX = "\\lambda"


def _rat_latex(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def _lam_power(k: int, latex: bool) -> str:
    sym = _LAM_TEX if latex else _LAM_TEXT
    if k == 1:
        return sym
    return f"{sym}^{{{k}}}" if latex else f"{sym}^{k}"


def lpoly_str(p: LPoly, latex: bool = False) -> str:
    """Expanded λ-polynomial, descending degree, no spaces."""
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = _rat_latex(a) if latex else rat_to_str(a)
        elif a == 1:
            body = _lam_power(k, latex)
        elif a.denominator == 1:
            body = f"{a.numerator}{_lam_power(k, latex)}"
        elif latex:
            body = f"{_rat_latex(a)}{_lam_power(k, latex)}"
        else:
            body = f"({rat_to_str(a)}){_lam_power(k, latex)}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts)


def _is_single_term(p: LPoly) -> bool:
    return sum(1 for c in p.coeffs if c) == 1


def _factor_monic(p: LPoly) -> list[tuple[LPoly, int]] | None:
    """Split a monic p as λ^a (λ + c)^k when it has that shape."""
    coeffs = p.coeffs
    a = 0
    while a < len(coeffs) and not coeffs[a]:
        a += 1
    rest = LPoly(coeffs[a:])
    factors: list[tuple[LPoly, int]] = []
    if a:
        factors.append((LPoly.lam(), a))
    k = rest.degree
    if k >= 1:
        c = rest.coeffs[k - 1] / k
        lin = LPoly((c, 1))
        if lin**k != rest:
            return None
        factors.append((lin, k))
    return factors


def _den_str(den: LPoly, latex: bool) -> tuple[str, bool]:
    """Rendered denominator and whether it needs parentheses after a slash."""
    factors = _factor_monic(den)
    if factors is None:
        return lpoly_str(den, latex), not _is_single_term(den)
    if latex and len(factors) == 1 and factors[0][1] == 1:
        return lpoly_str(factors[0][0], latex), False
    pieces = []
    for base, k in factors:
        b = lpoly_str(base, latex)
        if not _is_single_term(base):
            b = f"({b})"
        if k > 1:
            b = f"{b}^{{{k}}}" if latex else f"{b}^{k}"
        pieces.append(b)
    return "".join(pieces), len(pieces) > 1


def lrat_text(f: LRat) -> str:
    """Plain-text rendering, e.g. ``(λ+1)/(λ-1)^2``."""
    num = lpoly_str(f.num)
    if f.den.is_one():
        return num
    den, wrap = _den_str(f.den, latex=False)
    if not _is_single_term(f.num) or "/" in num:
        num = f"({num})"
    if wrap:
        den = f"({den})"
    return f"{num}/{den}"


def lrat_latex(f: LRat) -> str:
    """LaTeX rendering, e.g. ``\\frac{\\lambda+1}{(\\lambda-1)^{2}}``."""
    num = lpoly_str(f.num, latex=True)
    if f.den.is_one():
        return num
    den, _ = _den_str(f.den, latex=True)
    if f.num.lead < 0 and _is_single_term(f.num):
        return f"-\\frac{{{lpoly_str(-f.num, latex=True)}}}{{{den}}}"
    return f"\\frac{{{num}}}{{{den}}}"


def render_lrat(f: LRat, fmt: str = "text") -> str:
    return lrat_latex(f) if fmt == "latex" else lrat_text(f)


def _x_power(k: int, latex: bool) -> str:
    if k == 0:
        return ""
    if k == 1:
        return "x"
    return f"x^{{{k}}}" if latex else f"x^{k}"


def xpoly_str(p, latex: bool = False) -> str:
    """Descending-degree rendering of an XPoly."""
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c.is_zero():
            continue
        neg = c.num.lead < 0
        a = -c if neg else c
        xs = _x_power(k, latex)
        if k == 0:
            body = render_lrat(a, "latex" if latex else "text")
            if neg and a.den.is_one() and not _is_single_term(a.num):
                body = f"({body})"
        elif a.is_one():
            body = xs
        else:
            coeff = render_lrat(a, "latex" if latex else "text")
            if latex:
                if a.den.is_one() and not _is_single_term(a.num):
                    coeff = f"({coeff})"
                body = f"{coeff} {xs}"
            else:
                if a.is_constant() and a.num.lead.denominator == 1:
                    body = f"{coeff}{xs}"
                else:
                    body = f"({coeff})*{xs}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def xpoly_text(p) -> str:
    return xpoly_str(p, latex=False)


def xpoly_latex(p) -> str:
    return xpoly_str(p, latex=True)


def render_xpoly(p, fmt: str = "text") -> str:
    return xpoly_latex(p) if fmt == "latex" else xpoly_text(p)


# ---------------------------------------------------------------- reader

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<cmd>\\[A-Za-z]+)|(?P<ident>λ|lambda|l|x)|(?P<op>[-+*/^(){}\[\]]))"
)


class ParseError(ValueError):
    pass


def _tokenize(s: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at {s[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "cmd":
            if val == "\\lambda":
                tokens.append(("ident", "λ"))
            elif val == "\\frac":
                tokens.append(("frac", val))
            elif val in ("\\cdot", "\\times"):
                tokens.append(("op", "*"))
            elif val in ("\\left", "\\right", "\\,", "\\!"):
                continue
            else:
                raise ParseError(f"unsupported command {val}")
        elif kind == "ident":
            tokens.append(("ident", "x" if val == "x" else "λ"))
        else:
            tokens.append((kind, val))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.t = tokens
        self.i = 0

    def peek(self):
        return self.t[self.i] if self.i < len(self.t) else (None, None)

    def take(self, val=None):
        tok = self.peek()
        if tok[0] is None or (val is not None and tok[1] != val):
            raise ParseError(f"expected {val!r}, got {tok[1]!r}")
        self.i += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def _starts_atom(self):
        kind, val = self.peek()
        return kind in ("num", "ident", "frac") or val in ("(", "{", "[")

    def term(self):
        val = self.unary()
        while True:
            kind, op = self.peek()
            if op in ("*", "/"):
                self.take()
                rhs = self.unary()
            elif self._starts_atom():
                op = "*"
                rhs = self.power()
            else:
                return val
            val = val * rhs if op == "*" else _divide(val, rhs)

    def unary(self):
        op = self.peek()[1]
        if op == "-":
            self.take()
            return -self.unary()
        if op == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            exp = self._exponent()
            if exp < 0:
                base = _divide(_one(), base)
                exp = -exp
            return base**exp
        return base

    def _exponent(self) -> int:
        closing = {"{": "}", "(": ")"}
        op = self.peek()[1]
        if op in closing:
            self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            n = int(self.take()[1])
            self.take(closing[op])
            return -n if neg else n
        kind, val = self.take()
        if kind != "num":
            raise ParseError("exponents must be integers")
        return int(val)

    def atom(self):
        from .xpoly import XPoly

        kind, val = self.take()
        if kind == "num":
            return XPoly.constant(Fraction(int(val)))
        if kind == "ident":
            return XPoly.x() if val == "x" else XPoly.constant(LRat.lam())
        if kind == "frac":
            num = self.group()
            den = self.group()
            return _divide(num, den)
        closing = {"(": ")", "{": "}", "[": "]"}
        if val in closing:
            inner = self.expr()
            self.take(closing[val])
            return inner
        raise ParseError(f"unexpected token {val!r}")

    def group(self):
        if self.peek()[1] == "{":
            self.take()
            inner = self.expr()
            self.take("}")
            return inner
        return self.atom()


def _one():
    from .xpoly import XPoly

    return XPoly.constant(1)


def _divide(a, b):
    if b.degree > 0:
        raise ParseError("division by a polynomial in x is not supported")
    if b.is_zero():
        raise ParseError("division by zero")
    return a.scale(b.coeffs[0].inverse())


def parse_xpoly(s: str):
    """Read a polynomial in x over Q(λ) from text or LaTeX."""
    p = _Parser(_tokenize(s))
    val = p.expr()
    if p.peek()[0] is not None:
        raise ParseError(f"trailing input near {p.peek()[1]!r}")
    return val


def parse_lrat(s: str) -> LRat:
    """Read an element of Q(λ) from text or LaTeX."""
    val = parse_xpoly(s)
    if val.degree > 0:
        raise ParseError("expected a rational function of λ, found x")
    return val.coeffs[0] if val.coeffs else LRat(0)

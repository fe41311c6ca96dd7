import random

import pytest

from frobenius_euler.arith import LAMBDA, LRat
from frobenius_euler.frobenius import fe_number, fe_number_higher, fe_poly, fe_poly_higher
from frobenius_euler.render import (
    ParseError,
    lrat_latex,
    lrat_text,
    parse_lrat,
    parse_xpoly,
    xpoly_latex,
    xpoly_text,
)

from helpers import random_lrat, random_xpoly

lam = LAMBDA


@pytest.mark.parametrize(
    "value, text",
    [
        (fe_number(2), "(λ+1)/(λ-1)^2"),
        (fe_number_higher(1, 2), "2/(λ-1)"),
        (LRat(1), "1"),
        (1 / (1 - lam), "-1/(λ-1)"),
        (1 / lam**2, "1/λ^2"),
        (1 / (lam * (lam - 1) ** 2), "1/(λ(λ-1)^2)"),
        (lam / 2 + LRat(3), "(1/2)λ+3"),
        (1 / (lam**2 + 1), "1/(λ^2+1)"),
    ],
)
def test_text_goldens(value, text):
    assert lrat_text(value) == text
    assert parse_lrat(text) == value


def test_latex_goldens():
    assert xpoly_latex(fe_poly(1)) == "x + \\frac{1}{\\lambda-1}"
    assert lrat_latex(fe_number(2)) == "\\frac{\\lambda+1}{(\\lambda-1)^{2}}"
    assert xpoly_text(fe_poly_higher(3, 0)) == "x^3"
    assert xpoly_text(fe_poly(0)) == "1"


def test_latex_parses_back():
    rng = random.Random(17)
    for _ in range(100):
        f = random_lrat(rng, 3)
        assert parse_lrat(lrat_latex(f)) == f
        assert parse_lrat(lrat_text(f)) == f


def test_xpoly_parses_back():
    rng = random.Random(18)
    for _ in range(20):
        p = random_xpoly(rng, 6)
        assert parse_xpoly(xpoly_text(p)) == p
        assert parse_xpoly(xpoly_latex(p)) == p
    for n in range(6):
        assert parse_xpoly(xpoly_latex(fe_poly_higher(n, 2))) == fe_poly_higher(n, 2)


def test_reader_variants():
    assert parse_lrat("1/(lambda - 1)") == fe_number(1)
    assert parse_lrat("\\left(\\lambda+1\\right)\\cdot(\\lambda-1)^{-2}") == fe_number(2)
    assert parse_lrat("2l") == 2 * lam


@pytest.mark.parametrize("bad", ["1/0", "(λ+1", "λ ? 2", "1/x", "x"])
def test_reader_errors(bad):
    with pytest.raises(ParseError):
        parse_lrat(bad)

import math
from fractions import Fraction

import pytest

from frobenius_euler.arith import LAMBDA, LRat
from frobenius_euler.basis import FEExpansion, from_fe_basis
from frobenius_euler.frobenius import fe_poly
from frobenius_euler.identities import (
    AS_PRINTED,
    CORRECTED,
    REGISTRY,
    registry_list,
    thm3_coefficients,
    thm4_coefficients,
    thm5_coefficients,
    thm7_coefficients,
)
from frobenius_euler.verify import (
    UnknownIdentityError,
    oracle_expansion,
    parameter_grid,
    random_screen,
    verify_identity,
    verify_range,
)
from frobenius_euler.xpoly import XPoly

lam = LAMBDA


def test_registry_contents():
    ids = [i.id for i in registry_list()]
    assert len(ids) >= 11
    assert [i for i in ids if i.startswith("thm2")] == ["thm2"]
    for fam in ("thm3", "thm4", "thm5", "thm7"):
        assert f"{fam}-as-printed" in ids and f"{fam}-corrected" in ids
        assert REGISTRY[f"{fam}-corrected"].authoritative
        assert not REGISTRY[f"{fam}-as-printed"].authoritative
    for eq in ("eq2", "eq5", "eq7", "eq30", "eq32", "thm6"):
        assert eq in ids


def test_thm2_by_hand_at_one():
    rep = verify_identity("thm2", 1)
    assert rep.status == "verified" and rep.residual.is_zero()
    lhs, rhs = REGISTRY["thm2"].build(1)
    assert lhs == (XPoly.x() - 1).scale(1 + lam) == rhs


def test_thm2_to_10():
    assert all(rep.verified for rep in verify_range("thm2", 10))


def test_eq5_to_10():
    assert all(verify_identity("eq5", n).verified for n in range(11))


def test_thm7_as_printed_refuted_at_zero():
    rep = verify_identity("thm7-as-printed", 0, r=2)
    assert rep.status == "refuted"
    assert rep.residual == XPoly.constant(1 - 1 / (1 - lam) ** 2)
    assert rep.corrected_coefficients == FEExpansion(1, (LRat(1),))


def test_thm7_corrected():
    assert all(rep.verified for rep in verify_range("thm7-corrected", 8, 4))


def test_range_checks_and_grid():
    assert [(rep.n, rep.r) for rep in verify_range("eq32", 1, 2)] == [(0, 1), (0, 2), (1, 1), (1, 2)]
    assert parameter_grid(REGISTRY["eq2"], 2) == [(0, None), (1, None), (2, None)]
    with pytest.raises(UnknownIdentityError):
        verify_identity("thm99", 1)
    with pytest.raises(ValueError):
        verify_identity("thm6", 2)  # needs r
    with pytest.raises(ValueError):
        verify_identity("thm6", 2, r=0)
    with pytest.raises(ValueError):
        verify_identity("eq5", 2, r=1)
    with pytest.raises(ValueError):
        verify_identity("eq5", -1)


@pytest.mark.parametrize("ident", ["thm6", "eq32", "eq31"])
def test_higher_order_families_verified(ident):
    assert all(rep.verified for rep in verify_range(ident, 8, 4))


def test_eq2_to_24():
    assert all(rep.verified for rep in verify_range("eq2", 24))


def test_oracle_expansion_examples():
    conv = fe_poly(0) * fe_poly(1) + fe_poly(1) * fe_poly(0)
    assert oracle_expansion(conv, 1).coeffs == (LRat(0), LRat(2))
    assert oracle_expansion(fe_poly(4), 1).coeffs == tuple(LRat(int(k == 4)) for k in range(5))
    assert oracle_expansion(XPoly.x(), 2).coeffs == (2 / (1 - lam), LRat(1))
    with pytest.raises(ValueError):
        oracle_expansion(XPoly.x(), 0)


@pytest.mark.parametrize("n", range(9))
def test_corrected_closed_forms_match_oracle(n):
    lhs3, _ = REGISTRY["thm3-corrected"].build(n)
    assert list(oracle_expansion(lhs3, 1).coeffs) == thm3_coefficients(n, CORRECTED)
    lhs4, _ = REGISTRY["thm4-corrected"].build(n)
    assert list(oracle_expansion(lhs4, 1).coeffs) == thm4_coefficients(n, CORRECTED)
    for r in range(1, 5):
        lhs5, _ = REGISTRY["thm5-corrected"].build(n, r)
        assert list(oracle_expansion(lhs5, r).coeffs) == thm5_coefficients(n, r, CORRECTED)
        lhs7, _ = REGISTRY["thm7-corrected"].build(n, r)
        assert list(oracle_expansion(lhs7, 1).coeffs) == thm7_coefficients(n, r, CORRECTED)


def test_thm4_top_coefficient():
    for n in range(9):
        assert thm4_coefficients(n)[-1] == Fraction(2**n, math.factorial(n))
        assert thm4_coefficients(n, AS_PRINTED)[-1] != thm4_coefficients(n)[-1]


def test_refuted_reports_carry_oracle_expansion():
    rep = verify_identity("thm3-as-printed", 3)
    assert rep.status == "refuted"
    assert list(rep.corrected_coefficients.coeffs) == thm3_coefficients(3, CORRECTED)
    lhs, _ = REGISTRY["thm3-as-printed"].build(3)
    assert from_fe_basis(rep.corrected_coefficients) == lhs


def test_as_printed_variants_get_definite_status():
    for fam in ("thm3", "thm4", "thm5", "thm7"):
        reps = verify_range(f"{fam}-as-printed", 8, 4)
        assert reps and all(rep.status in ("verified", "refuted") for rep in reps)


def test_screen_examples():
    assert random_screen("thm2", 3, trials=20, seed=7).passed
    res = random_screen("thm7-as-printed", 0, r=2, trials=1, seed=1)
    assert not res.passed
    assert res.lhs_value == 1
    assert res.rhs_value == 1 / (1 - res.lam0) ** 2
    assert res.lam0 not in (0, 1)


def test_screen_is_deterministic():
    a = random_screen("thm3-as-printed", 4, trials=5, seed=13)
    b = random_screen("thm3-as-printed", 4, trials=5, seed=13)
    assert a == b


@pytest.mark.parametrize("seed", [0, 1, 2, 99])
def test_screen_never_flags_true_identity(seed):
    for n in range(5):
        assert random_screen("thm6", n, r=3, trials=5, seed=seed).passed
        assert random_screen("thm2", n, trials=5, seed=seed).passed


def test_screen_agrees_with_verifier_on_registry():
    for ident in registry_list():
        for n, r in parameter_grid(ident, 6, 3):
            rep = verify_identity(ident.id, n, r)
            screen = random_screen(ident.id, n, r, trials=4, seed=5)
            assert screen.passed == rep.verified, (ident.id, n, r)


def test_report_json_schema():
    rep = verify_identity("thm7-as-printed", 1, r=2, screen_seed=3)
    doc = rep.to_json()
    assert set(doc) >= {"id", "variant", "n", "r", "status", "residual", "corrected_coefficients", "seed"}
    assert doc["seed"] == 3 and doc["status"] == "refuted"
    assert XPoly.from_json(doc["residual"]) == rep.residual
    assert FEExpansion.from_json(doc["corrected_coefficients"]) == rep.corrected_coefficients

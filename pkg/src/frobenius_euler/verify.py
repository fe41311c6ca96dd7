"""Deciding registered identities exactly, screening them at random points, and summarizing.

Both sides of an identity are elements of Q(λ)[x] held in canonical form, so an
identity instance holds iff the residual LHS - RHS is the zero polynomial.  The
random screen evaluates both sides at rational points (λ0, x0); a disagreement
is a conclusive refutation, agreement is only evidence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .arith import PoleError, rat_to_str
from .basis import FEExpansion, to_fe_basis, to_fe_basis_higher
from .identities import REGISTRY, Identity, registry_list
from .render import xpoly_text
from .xpoly import XPoly

SCREEN_GENERATOR = "python random.Random (MT19937), seeded with the string '<seed>:<id>:<n>:<r>'"
_MAX_RESAMPLES = 10_000


class UnknownIdentityError(LookupError):
    pass


@dataclass(frozen=True)
class ScreenResult:
    passed: bool
    trials: int
    seed: int
    lam0: Optional[Fraction] = None
    x0: Optional[Fraction] = None
    lhs_value: Optional[Fraction] = None
    rhs_value: Optional[Fraction] = None

    def to_json(self) -> dict:
        if self.passed:
            return {"status": "pass", "trials": self.trials, "seed": self.seed}
        return {
            "status": "counterexample",
            "trials": self.trials,
            "seed": self.seed,
            "lambda0": rat_to_str(self.lam0),
            "x0": rat_to_str(self.x0),
            "lhs_value": rat_to_str(self.lhs_value),
            "rhs_value": rat_to_str(self.rhs_value),
        }


@dataclass(frozen=True)
class IdentityReport:
    id: str
    variant: str
    n: int
    r: Optional[int]
    status: str
    residual: XPoly
    corrected_coefficients: Optional[FEExpansion] = None
    seed: Optional[int] = None
    screen: Optional[ScreenResult] = field(default=None, compare=False)

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "variant": self.variant,
            "n": self.n,
            "r": self.r,
            "status": self.status,
            "residual": self.residual.to_json(),
            "corrected_coefficients": (
                self.corrected_coefficients.to_json() if self.corrected_coefficients is not None else None
            ),
            "seed": self.seed,
            "screen": self.screen.to_json() if self.screen is not None else None,
        }


def get_identity(identity_id: str) -> Identity:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity {identity_id!r}") from None


def _check_params(ident: Identity, n: int, r: Optional[int]) -> None:
    if n < max(ident.n_min, 0):
        raise ValueError(f"{ident.id}: n = {n} is out of range")
    if ident.uses_r:
        if r is None or r < ident.r_min:
            raise ValueError(f"{ident.id}: needs an order r >= {ident.r_min}, got {r}")
    elif r is not None:
        raise ValueError(f"{ident.id}: takes no order parameter")


def oracle_expansion(p: XPoly, r: int) -> FEExpansion:
    """Expansion of p in the order-r Frobenius-Euler basis, computed from derivative data."""
    if r < 1:
        raise ValueError("basis order must be at least 1")
    return to_fe_basis(p) if r == 1 else to_fe_basis_higher(p, r)


def _sample_point(rng: random.Random) -> tuple[Fraction, Fraction]:
    while True:
        lam0 = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
        if lam0 not in (0, 1):
            break
    x0 = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
    return lam0, x0


def screen_sides(lhs: XPoly, rhs: XPoly, rng: random.Random, trials: int, seed: int) -> ScreenResult:
    done = 0
    resamples = 0
    while done < trials:
        lam0, x0 = _sample_point(rng)
        try:
            a = lhs.eval_at(lam0, x0)
            b = rhs.eval_at(lam0, x0)
        except PoleError:
            resamples += 1
            if resamples > _MAX_RESAMPLES:
                raise RuntimeError("random screen kept hitting poles") from None
            continue
        done += 1
        if a != b:
            return ScreenResult(False, done, seed, lam0, x0, a, b)
    return ScreenResult(True, done, seed)


def _instance_rng(seed: int, identity_id: str, n: int, r: Optional[int]) -> random.Random:
    return random.Random(f"{seed}:{identity_id}:{n}:{r}")


def random_screen(identity_id: str, n: int, r: Optional[int] = None, trials: int = 10, seed: int = 0) -> ScreenResult:
    """Compare both sides at ``trials`` random rational points; deterministic in ``seed``."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    ident = get_identity(identity_id)
    _check_params(ident, n, r)
    lhs, rhs = ident.build(n, r)
    return screen_sides(lhs, rhs, _instance_rng(seed, identity_id, n, r), trials, seed)


def verify_identity(
    identity_id: str,
    n: int,
    r: Optional[int] = None,
    screen_seed: Optional[int] = None,
    screen_trials: int = 3,
) -> IdentityReport:
    """Decide one instance exactly.  With ``screen_seed`` the random screen runs first."""
    ident = get_identity(identity_id)
    _check_params(ident, n, r)
    lhs, rhs = ident.build(n, r)
    screen = None
    if screen_seed is not None:
        screen = screen_sides(lhs, rhs, _instance_rng(screen_seed, identity_id, n, r), screen_trials, screen_seed)
    residual = lhs - rhs
    corrected = None
    if residual.is_zero():
        status = "verified"
    else:
        status = "refuted"
        if ident.expansion_order is not None:
            corrected = oracle_expansion(lhs, ident.expansion_order(n, r))
    return IdentityReport(ident.id, ident.variant, n, r, status, residual, corrected, screen_seed, screen)


def parameter_grid(ident: Identity, n_max: int, r_max: Optional[int] = None) -> list[tuple[int, Optional[int]]]:
    if ident.uses_r:
        r_hi = 4 if r_max is None else r_max
        return [(n, r) for n in range(ident.n_min, n_max + 1) for r in range(ident.r_min, r_hi + 1)]
    return [(n, None) for n in range(ident.n_min, n_max + 1)]


def verify_range(
    identity_id: str,
    n_max: int,
    r_max: Optional[int] = None,
    screen_seed: Optional[int] = None,
) -> list[IdentityReport]:
    """One report per (n, r) grid point, ordered by n then r."""
    ident = get_identity(identity_id)
    return [verify_identity(identity_id, n, r, screen_seed) for n, r in parameter_grid(ident, n_max, r_max)]


def summarize(ident: Identity, reports: list[IdentityReport], n_max: int, r_max: Optional[int]) -> dict:
    """One summary row: range checked, verdict and the first failing instance."""
    failing = next((rep for rep in reports if not rep.verified), None)
    screen_failures = [rep for rep in reports if rep.screen is not None and not rep.screen.passed]
    row = {
        "id": ident.id,
        "family": ident.family,
        "variant": ident.variant,
        "authoritative": ident.authoritative,
        "statement": ident.statement,
        "n_range": [ident.n_min, n_max],
        "r_range": [ident.r_min, 4 if r_max is None else r_max] if ident.uses_r else None,
        "instances": len(reports),
        "verdict": "verified" if failing is None else "refuted",
        "first_counterexample": None,
        "screen": None,
    }
    if failing is not None:
        row["first_counterexample"] = {
            "n": failing.n,
            "r": failing.r,
            "residual": failing.residual.to_json(),
            "residual_text": xpoly_text(failing.residual),
        }
    if any(rep.screen is not None for rep in reports):
        row["screen"] = {
            "instances": sum(1 for rep in reports if rep.screen is not None),
            "counterexamples": len(screen_failures),
            "first": screen_failures[0].screen.to_json() | {"n": screen_failures[0].n, "r": screen_failures[0].r}
            if screen_failures
            else None,
        }
    return row


def verify_all(
    n_max: int = 8,
    r_max: int = 4,
    screen_seed: Optional[int] = None,
    ids: Optional[Iterable[str]] = None,
) -> tuple[list[IdentityReport], list[dict]]:
    """Verify every (or each selected) identity over the grid; returns reports and summary rows."""
    selected = registry_list() if ids is None else [get_identity(i) for i in sorted(ids)]
    reports: list[IdentityReport] = []
    rows: list[dict] = []
    for ident in selected:
        batch = verify_range(ident.id, n_max, r_max, screen_seed)
        reports.extend(batch)
        rows.append(summarize(ident, batch, n_max, r_max))
    return reports, rows


def summary_document(rows: list[dict], n_max: int, r_max: int, seed: Optional[int]) -> dict:
    return {
        "n_max": n_max,
        "r_max": r_max,
        "seed": seed,
        "screen_generator": SCREEN_GENERATOR if seed is not None else None,
        "identities": rows,
        "authoritative_verified": all(row["verdict"] == "verified" for row in rows if row["authoritative"]),
    }

"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line; the lines are also collected and
repeated in the terminal summary under "acceptance criteria".
"""

import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_KEY
from helpers import random_xpoly
from oracles import euler_value_at_zero

from frobenius_euler.arith import LAMBDA
from frobenius_euler.basis import from_fe_basis, to_fe_basis_higher, to_fe_basis_higher_sum
from frobenius_euler.frobenius import fe_number, fe_numbers_via_series
from frobenius_euler.identities import (
    REGISTRY,
    thm3_coefficients,
    thm4_coefficients,
    thm5_coefficients,
    thm7_coefficients,
)
from frobenius_euler.verify import oracle_expansion, summary_document, verify_all, verify_range
from frobenius_euler.xpoly import XPoly

ADJUDICATED = ("thm3", "thm4", "thm5", "thm7")
CORRECTED_COEFFS = {
    "thm3": lambda n, r: thm3_coefficients(n),
    "thm4": lambda n, r: thm4_coefficients(n),
    "thm5": lambda n, r: thm5_coefficients(n, r),
    "thm7": lambda n, r: thm7_coefficients(n, r),
}


@pytest.fixture
def record(request):
    start = time.perf_counter()

    def _record(name: str, failures: list[str]):
        elapsed = time.perf_counter() - start
        status = "PASS" if not failures else "FAIL"
        line = f"{status}  {name}  ({elapsed:.1f}s)"
        if failures:
            line += "  first failure: " + failures[0]
        print(line)
        request.config.stash[ACCEPTANCE_KEY].append(line)
        assert not failures, "\n".join(failures)

    return _record


def test_number_oracle_equivalence(record):
    series = fe_numbers_via_series(24)
    failures = [f"n={n}" for n in range(25) if fe_number(n) != series[n]]
    record("number recurrence == series reciprocal, n <= 24", failures)


def test_euler_specialization(record):
    expected = {0: 1, 1: Fraction(-1, 2), 2: 0, 3: Fraction(1, 4), 4: 0, 5: Fraction(-1, 2), 6: 0}
    failures = []
    for n, value in expected.items():
        got = fe_number(n).eval_at(-1)
        if got != value or got != euler_value_at_zero(n):
            failures.append(f"n={n}: got {got}, expected {value}")
    record("fe_number(n) at λ=-1 equals E_n(0), n <= 6", failures)


def test_operator_identities(record):
    failures = []
    for ident in ("eq5", "eq6", "eq7", "eq30", "eq31", "eq32"):
        for rep in verify_range(ident, 12, 4):
            if not rep.verified:
                failures.append(f"{ident} n={rep.n} r={rep.r}")
    for rep in verify_range("eq2", 24):
        if not rep.verified:
            failures.append(f"eq2 n={rep.n}")
    record("operator identities exact, n <= 12, r <= 4; eq2 for n <= 24", failures)


def test_basis_roundtrips(record):
    rng = random.Random(20240601)
    corpus = [random_xpoly(rng, max_degree=10) for _ in range(100)]
    failures = []
    for i, p in enumerate(corpus):
        for r in (1, 2, 3, 4):
            e = to_fe_basis_higher(p, r)
            if from_fe_basis(e) != p:
                failures.append(f"roundtrip poly#{i} r={r}")
            if to_fe_basis_higher_sum(p, r) != e:
                failures.append(f"dual formulas poly#{i} r={r}")
    record("basis roundtrip and dual-formula agreement, 100 polys, deg <= 10, r = 1..4", failures)


def test_thm2_and_thm6(record):
    failures = [f"thm2 n={rep.n}" for rep in verify_range("thm2", 10) if not rep.verified]
    failures += [f"thm6 n={rep.n} r={rep.r}" for rep in verify_range("thm6", 8, 4) if not rep.verified]
    record("thm2 exact for n <= 10; thm6 exact for n <= 8, r <= 4", failures)


def test_adjudication(record):
    ids = [ident.id for ident in REGISTRY.values() if ident.family in ADJUDICATED]
    reports, rows = verify_all(8, 4, None, ids)
    doc = summary_document(rows, 8, 4, None)
    by_id = {row["id"]: row for row in doc["identities"]}
    failures = []
    for family in ADJUDICATED:
        printed = by_id[f"{family}-as-printed"]
        corrected = by_id[f"{family}-corrected"]
        if printed["verdict"] not in ("verified", "refuted"):
            failures.append(f"{family}-as-printed has no definite verdict")
        if printed["verdict"] == "refuted" and printed["first_counterexample"] is None:
            failures.append(f"{family}-as-printed lacks a first counterexample")
        if corrected["verdict"] != "verified":
            failures.append(f"{family}-corrected refuted at {corrected['first_counterexample']}")
        ident = REGISTRY[f"{family}-corrected"]
        for rep in reports:
            if rep.id != ident.id:
                continue
            lhs, _ = ident.build(rep.n, rep.r)
            oracle = oracle_expansion(lhs, ident.expansion_order(rep.n, rep.r)).trimmed().coeffs
            closed_trimmed = tuple(CORRECTED_COEFFS[family](rep.n, rep.r))
            while closed_trimmed and closed_trimmed[-1].is_zero():
                closed_trimmed = closed_trimmed[:-1]
            if oracle != closed_trimmed:
                failures.append(f"{family} corrected coefficients differ from oracle at n={rep.n} r={rep.r}")
    ce = by_id["thm7-as-printed"]["first_counterexample"]
    if ce is None:
        failures.append("thm7-as-printed not refuted")
    else:
        expected = XPoly.constant(1 - 1 / (1 - LAMBDA) ** 2)
        if XPoly.from_json(ce["residual"]) != expected:
            failures.append(f"thm7-as-printed residual {ce['residual_text']}")
        r2 = next(rep for rep in reports if rep.id == "thm7-as-printed" and rep.n == 0 and rep.r == 2)
        if r2.verified or r2.residual != expected:
            failures.append("thm7-as-printed at n=0, r=2 does not show residual 1 - 1/(1-λ)^2")
    record("adjudication of thm3/4/5/7 over n <= 8, r <= 4", failures)


def test_determinism(record, tmp_path):
    outputs = []
    for name in ("first.jsonl", "second.jsonl"):
        path = tmp_path / name
        proc = subprocess.run(
            [sys.executable, "-m", "frobenius_euler", "verify", "all", "--max-n", "8", "--max-r", "4",
             "--screen-seed", "42", "--format", "json", "--output", str(path)],
            capture_output=True,
        )
        outputs.append((proc.returncode, path.read_bytes() if path.exists() else b""))
    failures = []
    if outputs[0][0] != 0:
        failures.append(f"exit code {outputs[0][0]}")
    if not outputs[0][1] or outputs[0] != outputs[1]:
        failures.append("outputs differ between runs")
    record("verify all --screen-seed 42 is byte-identical across runs", failures)

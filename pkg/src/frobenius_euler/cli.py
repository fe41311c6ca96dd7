"""Command-line front end: ``fe-lab {number,poly,expand,verify,report}``.

Exit codes: 0 success (or everything verified), 1 a refutation was found,
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .basis import FEExpansion, to_fe_basis, to_fe_basis_higher
from .frobenius import fe_number_higher, fe_poly_higher
from .identities import registry_list
from .render import ParseError, render_lrat, render_xpoly
from .verify import REGISTRY, summary_document, verify_all
from .xpoly import XPoly

FORMATS = ("text", "json", "latex")


class UsageError(Exception):
    pass


def _nonneg(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


def _dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False)


def cmd_number(n: int, r: int, fmt: str) -> str:
    value = fe_number_higher(n, r)
    if fmt == "json":
        return _dumps(value.to_json())
    return render_lrat(value, fmt)


def cmd_poly(n: int, r: int, fmt: str) -> str:
    p = fe_poly_higher(n, r)
    if fmt == "json":
        return _dumps(p.to_json())
    return render_xpoly(p, fmt)


def read_xpoly_document(text: str) -> XPoly:
    try:
        data = json.loads(text)
        return XPoly.from_json(data)
    except (json.JSONDecodeError, ValueError, ParseError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed XPoly document: {exc}") from None


def render_expansion(e: FEExpansion, fmt: str) -> str:
    if fmt == "json":
        return _dumps(e.to_json())
    symbol = "b" if e.order == 1 else "C"
    lines = []
    for k, c in enumerate(e.coeffs):
        if fmt == "latex":
            lines.append(f"{symbol}_{{{k}}} = {render_lrat(c, 'latex')}")
        else:
            lines.append(f"{symbol}_{k} = {render_lrat(c)}")
    return "\n".join(lines)


def cmd_expand(text: str, r: int, fmt: str) -> str:
    if r < 1:
        raise UsageError("expansion order must be at least 1")
    p = read_xpoly_document(text)
    return render_expansion(to_fe_basis_higher(p, r) if r > 1 else to_fe_basis(p), fmt)


def _resolve_ids(target: str) -> tuple[list[str], bool]:
    """Identity ids to run and whether the exit code follows authoritative variants only."""
    if target == "all":
        return [ident.id for ident in registry_list()], True
    if target in REGISTRY:
        return [target], False
    family = [ident.id for ident in registry_list() if ident.family == target]
    if family:
        return family, True
    raise UsageError(f"unknown identity {target!r}")


def _report_line(rep) -> str:
    r = "-" if rep.r is None else str(rep.r)
    line = f"{rep.id:<17} n={rep.n:<2} r={r:<2} {rep.status}"
    if rep.screen is not None:
        line += "  screen=" + ("pass" if rep.screen.passed else "counterexample")
    if not rep.verified:
        line += f"  residual: {render_xpoly(rep.residual)}"
    return line


def _summary_text(doc: dict) -> str:
    lines = [f"n_max={doc['n_max']} r_max={doc['r_max']} seed={doc['seed']}"]
    if doc["screen_generator"]:
        lines.append(f"screen generator: {doc['screen_generator']}")
    for row in doc["identities"]:
        rng = f"n={row['n_range'][0]}..{row['n_range'][1]}"
        if row["r_range"]:
            rng += f" r={row['r_range'][0]}..{row['r_range'][1]}"
        line = f"{row['id']:<17} {row['variant']:<10} {rng:<18} {row['verdict']}"
        ce = row["first_counterexample"]
        if ce is not None:
            r = "" if ce["r"] is None else f", r={ce['r']}"
            line += f"  first counterexample n={ce['n']}{r}: residual {ce['residual_text']}"
        lines.append(line)
    return "\n".join(lines)


def cmd_verify(target: str, n_max: int, r_max: int, seed: Optional[int], fmt: str) -> tuple[str, int]:
    ids, authoritative_only = _resolve_ids(target)
    reports, rows = verify_all(n_max, r_max, seed, ids)
    doc = summary_document(rows, n_max, r_max, seed)
    if fmt == "json":
        lines = [_dumps(rep.to_json()) for rep in reports]
        lines.append(_dumps({"summary": doc}))
    else:
        lines = [_report_line(rep) for rep in reports]
        lines.append("")
        lines.append(_summary_text(doc))
    if authoritative_only:
        ok = doc["authoritative_verified"]
    else:
        ok = all(rep.verified for rep in reports)
    return "\n".join(lines), 0 if ok else 1


def cmd_report(n_max: int, r_max: int, seed: Optional[int], fmt: str) -> str:
    _, rows = verify_all(n_max, r_max, seed)
    doc = summary_document(rows, n_max, r_max, seed)
    if fmt == "text":
        return _summary_text(doc)
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fe-lab", description="Exact Frobenius-Euler numbers, polynomials, expansions and identity checks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=FORMATS, default="text"):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("number", help="Frobenius-Euler number H_n^(r)(λ)")
    p.add_argument("n", type=_nonneg)
    p.add_argument("--order", "-r", type=_nonneg, default=1)
    add_format(p)

    p = sub.add_parser("poly", help="Frobenius-Euler polynomial H_n^(r)(x|λ)")
    p.add_argument("n", type=_nonneg)
    p.add_argument("--order", "-r", type=_nonneg, default=1)
    add_format(p)

    p = sub.add_parser("expand", help="expand an XPoly JSON document in the order-r basis")
    p.add_argument("input", help="path to the XPoly JSON document, or - for stdin")
    p.add_argument("--order", "-r", type=_nonneg, default=1)
    add_format(p)

    p = sub.add_parser("verify", help="verify an identity (or 'all', or a family such as thm3)")
    p.add_argument("target")
    p.add_argument("--max-n", type=_nonneg, default=8)
    p.add_argument("--max-r", type=_nonneg, default=4)
    p.add_argument("--screen-seed", type=int, default=None)
    p.add_argument("--output", default=None)
    add_format(p, choices=("text", "json"))

    p = sub.add_parser("report", help="write the aggregated identity-status document")
    p.add_argument("--max-n", type=_nonneg, default=8)
    p.add_argument("--max-r", type=_nonneg, default=4)
    p.add_argument("--screen-seed", type=int, default=None)
    p.add_argument("--output", default=None)
    add_format(p, choices=("json", "text"), default="json")
    return parser


def _emit(text: str, output: Optional[str]) -> None:
    if output is None or output == "-":
        sys.stdout.write(text + "\n")
        return
    try:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {output}: {exc}") from None


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    code = 0
    try:
        if args.command == "number":
            _emit(cmd_number(args.n, args.order, args.format), None)
        elif args.command == "poly":
            _emit(cmd_poly(args.n, args.order, args.format), None)
        elif args.command == "expand":
            try:
                if args.input == "-":
                    text = sys.stdin.read()
                else:
                    with open(args.input, encoding="utf-8") as fh:
                        text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read {args.input}: {exc}") from None
            _emit(cmd_expand(text, args.order, args.format), None)
        elif args.command == "verify":
            text, code = cmd_verify(args.target, args.max_n, args.max_r, args.screen_seed, args.format)
            _emit(text, args.output)
        elif args.command == "report":
            _emit(cmd_report(args.max_n, args.max_r, args.screen_seed, args.format), args.output)
    except UsageError as exc:
        print(f"fe-lab: error: {exc}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())

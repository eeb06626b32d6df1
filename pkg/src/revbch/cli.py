"""Command-line surface: code reports, table regeneration, verification
sweeps, and witness searches.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import distance, tables, theory, verify
from .bch import build_code, split_prime_power
from .ffield import build_field
from .qpoly import Poly, poly_from_text

LOG_DIR_ENV = "REVBCH_LOG_DIR"


def _parse_modulus(text: str | None, p: int):
    if text is None:
        return None
    return [c % p for c in poly_from_text(text)]


def _resolve_field(args):
    p, e = split_prime_power(args.q)
    modulus = _parse_modulus(getattr(args, "modulus", None), p)
    return build_field(p, e * args.m, modulus)


def _emit(payload, args):
    if getattr(args, "format", "json") == "json":
        text = json.dumps(payload, indent=2, default=str)
    elif args.format == "csv" and isinstance(payload, dict) and "csv" in payload:
        text = payload["csv"]
    else:
        text = json.dumps(payload, default=str)
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _log_rows(rows, command: str, log_dir: str | None):
    log_dir = log_dir or os.environ.get(LOG_DIR_ENV)
    if not log_dir:
        return None
    path = Path(log_dir)
    path.mkdir(parents=True, exist_ok=True)
    stamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%SZ")
    fname = path / f"{stamp}-{command}.jsonl"
    with fname.open("w") as fh:
        for row in rows:
            fh.write(json.dumps(row, default=str) + "\n")
    return str(fname)


def cmd_info(args) -> int:
    field = _resolve_field(args)
    code = build_code(args.q, args.m, args.delta, args.variant, field=field)
    report = code.report()
    try:
        closed = theory.dimension_closed_form(args.q, args.m, args.delta)
        report["k_closed"] = closed.k_closed
        report["dimension_case"] = closed.case_label
    except theory.FormulaNotApplicable:
        report["k_closed"] = "n/a"
    report["bch_floor"] = theory.bch_lower_bound(args.delta) \
        if args.variant in ("tilde", "overline") else args.delta
    if args.variant == "overline":
        report["sphere_packing_caps_distance"] = theory.sphere_packing_trigger(
            args.q, args.m, args.delta, code.k)
    cert = distance.certify(code, args.budget)
    report["distance"] = cert.to_json()
    _emit(report, args)
    _log_rows([report], "info", args.log_dir)
    return 0


def cmd_table(args) -> int:
    if args.which == 1:
        payload = tables.generate_table1()
        ok = all(r["certified"] for r in payload["rows"]) \
            and not payload["negative_control"]["certified"]
    else:
        payload = tables.generate_table2(args.budget)
        payload["csv"] = tables.table2_csv(payload)
        ok = all(r["k_matches_published"] for r in payload["rows"])
    if args.format == "csv" and args.which == 2:
        _emit(payload, args)
    else:
        payload.pop("csv", None)
        _emit(payload, args)
    _log_rows(payload["rows"], f"table{args.which}", args.log_dir)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    suite = verify.SUITES[args.suite]
    ok, rows = suite()
    logged = _log_rows(rows, f"verify-{args.suite}", args.log_dir)
    failures = [r for r in rows if r.get("match") is False]
    summary = {"suite": args.suite, "cases": len(rows),
               "failures": len(failures), "ok": ok, "log": logged}
    _emit(summary, args)
    return 0 if ok else 1


def cmd_witness(args) -> int:
    field = _resolve_field(args) if args.kind != "subspace" else \
        build_field(2, args.m, _parse_modulus(args.modulus, 2))
    if args.kind == "subgroup":
        c = distance.subgroup_witness(args.q, args.m, args.delta, field=field)
        plus = build_code(args.q, args.m, args.delta, "plus", field=field)
        cert = distance.lift_reversible(c, plus)
        code = build_code(args.q, args.m, args.delta, "overline", field=field)
    elif args.kind == "subspace":
        found = distance.subspace_quadruple_witness(args.m, args.r, field=field)
        if found is None:
            _emit({"result": None, "note": "no valid subspace quadruple found"}, args)
            return 1
        quad, witness, cert = found
        code = build_code(2, args.m, (1 << args.r) - 1, "overline", field=field)
        payload = cert.to_json(code)
        payload["quadruple"] = {
            name: sorted(getattr(quad, name)) for name in ("h1", "h2", "h3", "h4")}
        _emit(payload, args)
        _log_rows([payload], "witness", args.log_dir)
        return 0
    else:  # reversible: lift a caller-supplied codeword
        if not args.codeword:
            print("--codeword is required for --kind reversible", file=sys.stderr)
            return 2
        plus = build_code(args.q, args.m, args.delta, "plus", field=field)
        c = Poly.from_int_coeffs(field, poly_from_text(args.codeword))
        cert = distance.lift_reversible(c, plus)
        code = build_code(args.q, args.m, args.delta, "overline", field=field)
    payload = cert.to_json(code)
    _emit(payload, args)
    _log_rows([payload], "witness", args.log_dir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revbch",
        description="Reversible BCH codes: construction, dimensions, distances")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, delta=True):
        p.add_argument("--q", type=int, default=2, help="alphabet size (prime power)")
        p.add_argument("--m", type=int, required=True, help="extension degree")
        if delta:
            p.add_argument("--delta", type=int, required=True,
                           help="designed distance")
        p.add_argument("--modulus", type=str, default=None,
                       help='field modulus in caret notation, e.g. "x^5+x^2+1"')
        p.add_argument("--budget", type=int, default=distance.DEFAULT_SEARCH_BUDGET)
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--out", type=str, default=None)
        p.add_argument("--log-dir", type=str, default=None)

    p_info = sub.add_parser("info", help="report one code")
    common(p_info)
    p_info.add_argument("--variant", choices=("plus", "minus", "tilde", "overline"),
                        default="overline")
    p_info.set_defaults(func=cmd_info)

    p_table = sub.add_parser("table", help="regenerate a published table")
    p_table.add_argument("--which", type=int, choices=(1, 2), required=True)
    p_table.add_argument("--budget", type=int, default=distance.DEFAULT_SEARCH_BUDGET)
    p_table.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p_table.add_argument("--out", type=str, default=None)
    p_table.add_argument("--log-dir", type=str, default=None)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run a verification sweep")
    p_verify.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    p_verify.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p_verify.add_argument("--out", type=str, default=None)
    p_verify.add_argument("--log-dir", type=str, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_wit = sub.add_parser("witness", help="search for a distance witness")
    p_wit.add_argument("--kind", choices=("subgroup", "subspace", "reversible"),
                       required=True)
    p_wit.add_argument("--q", type=int, default=2)
    p_wit.add_argument("--m", type=int, required=True)
    p_wit.add_argument("--delta", type=int, default=None)
    p_wit.add_argument("--r", type=int, default=None, help="subspace dimension")
    p_wit.add_argument("--codeword", type=str, default=None,
                       help="codeword to lift (kind=reversible)")
    p_wit.add_argument("--modulus", type=str, default=None)
    p_wit.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p_wit.add_argument("--out", type=str, default=None)
    p_wit.add_argument("--log-dir", type=str, default=None)
    p_wit.set_defaults(func=cmd_witness)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "witness":
        if args.kind in ("subgroup", "reversible") and args.delta is None:
            parser.error("--delta is required for this witness kind")
        if args.kind == "subspace" and args.r is None:
            parser.error("--r is required for subspace witnesses")
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

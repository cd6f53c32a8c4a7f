"""Command-line front end.

Examples:
  bsymbol verify --p 2 --s 4 --e 1 --b theorem
  bsymbol verify --p 5 --s 3 --e 2 --variant shortened --format csv
  bsymbol construct --p 3 --s 3 --e 2 --out code.txt
  bsymbol search --p 2 --s 3,4 --e 1 --format csv --out sweep.csv
  bsymbol search --grid grid.json --jobs 4 --out sweep.json
  bsymbol dump-field --p 2 --m 4

Exit codes: 0 all checks passed, 1 a verified claim failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .codes import VARIANTS, Code, derive_params
from .errors import BSymbolError
from .field import build_field, poly_to_str
from .search import Point, SearchGrid, all_passed, emit_report, resolve_b_range, run_search
from .bounds import verify_construction

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _b_policy(text: str):
    if text in ("theorem", "all"):
        return text
    return _int_list(text)


def _write(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bsymbol", description=__doc__.split("\n")[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def point_args(sp, many=False):
        conv = _int_list if many else int
        req = not many
        sp.add_argument("--p", type=conv, required=req, help="characteristic")
        sp.add_argument("--f", type=conv, default=[1] if many else 1, help="q = p^f")
        sp.add_argument("--s", type=conv, required=req, help="Q = q^s")
        sp.add_argument("--e", type=conv, default=[1] if many else 1, help="n = (Q-1)/e")
        if many:
            sp.add_argument("--variant", default="full",
                            help="comma list of: " + ", ".join(VARIANTS))
        else:
            sp.add_argument("--variant", choices=VARIANTS, default="full")

    sp = sub.add_parser("verify", help="verify one construction")
    point_args(sp)
    sp.add_argument("--b", type=_b_policy, default="theorem", help="theorem | all | 2,3,...")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("construct", help="dump every codeword")
    point_args(sp)
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("search", help="verify a parameter grid")
    point_args(sp, many=True)
    sp.add_argument("--grid", default=None, help="JSON grid file (overrides point flags)")
    sp.add_argument("--b", type=_b_policy, default="theorem")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out", default=None)
    sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("dump-field", help="print GF(p^m) tables")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--out", default=None)
    return ap


def _cmd_verify(args) -> int:
    params = derive_params(args.p, args.f, args.s, args.e)
    length = Code(params, args.variant).length
    b_range = resolve_b_range(args.b, params, length)
    report = verify_construction(params, args.variant, b_range, raise_on_failure=False)
    emit_report([report], args.format, args.out)
    for fl in report.failures:
        print(f"FAILED {fl.claim} b={fl.b} beta={fl.witness}: {fl.message}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_construct(args) -> int:
    code = Code(derive_params(args.p, args.f, args.s, args.e), args.variant)
    _write("\n".join(code.dump_lines()) + "\n", args.out)
    return EXIT_OK


def _cmd_search(args) -> int:
    if args.grid:
        doc = json.loads(Path(args.grid).read_text(encoding="utf-8"))
        doc.setdefault("b", args.b)
        grid = SearchGrid.from_dict(doc)
    else:
        if args.p is None or args.s is None:
            raise BSymbolError("search needs --grid or both --p and --s")
        variants = [v.strip() for v in args.variant.split(",") if v.strip()]
        grid = SearchGrid(p=args.p, f=args.f, s=args.s, e=args.e,
                          variants=variants, b=args.b)
    results = run_search(grid, jobs=args.jobs)
    emit_report(results, args.format, args.out)
    for r in results:
        reason = getattr(r, "reason", None)
        if reason:
            print(f"skipped {r.point.as_dict()}: {reason}", file=sys.stderr)
    return EXIT_OK if all_passed(results) else EXIT_FAIL


def _cmd_dump_field(args) -> int:
    F = build_field(args.p, args.m)
    doc = {
        "p": F.p, "m": F.m, "order": F.order,
        "modulus_poly": poly_to_str(F.modulus_poly),
        "gamma": F.gamma,
        "antilog": list(F.antilog_table),
        "log": [None if v < 0 else v for v in F.log_table],
    }
    _write(json.dumps(doc) + "\n", args.out)
    return EXIT_OK


COMMANDS = {
    "verify": _cmd_verify,
    "construct": _cmd_construct,
    "search": _cmd_search,
    "dump-field": _cmd_dump_field,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (BSymbolError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

"""``superz`` command line: verify, case, table, theorems.

Exit status is 0 when every check passes, 1 on a verification failure and
2 on a usage error (bad arguments, unknown case, non-simple alpha).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import builders
from .builders import get_algebra
from .orbits import CatalogError, catalog, get_case
from .report import case_markdown, case_report, table_markdown, table_report, to_json
from .scalars import is_symbolic, parse_scalar
from .theorems import TheoremReport, verify_case

ALGEBRAS = ("d21", "g3", "f4")


class UsageError(Exception):
    pass


def _alpha(args):
    text = args.alpha if args.alpha is not None else os.environ.get("SUPERZ_ALPHA")
    if text is None or text == "":
        return None
    try:
        val = parse_scalar(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse alpha {text!r}: {exc}") from None
    if is_symbolic(val):
        raise UsageError("alpha must be a rational number p/q")
    if val in (0, -1):
        raise UsageError(f"non-simple parameter alpha={val}")
    return val


def _load(alg: str, alpha):
    try:
        return get_algebra(alg, alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(args, out) -> int:
    alpha = _alpha(args) if args.algebra == "d21" else None
    g = _load(args.algebra, alpha)
    ok = True
    rep = g.verify_axioms()
    n_even = len(g.even_indices())
    print(f"{rep.summary()} (dim {n_even}|{g.n - n_even}, Jacobi over {g.n}^3 triples)",
          file=out)
    ok &= rep.ok
    if args.algebra == "g3":
        g2 = get_algebra("g2")
        vec = builders.pairing_vectors(builders.load_p7(), g2.names())
        bad = builders.antisymmetry_defects(vec, builders.load_p7().labels)
        print("p7 antisymmetry " + ("OK" if not bad else f"FAILS on {len(bad)} cells"), file=out)
        ok &= not bad
    if args.algebra == "f4":
        so7 = get_algebra("so7")
        tab = builders.load_p8()
        vec = builders.pairing_vectors(tab, so7.names(), so7.aliases)
        bad = builders.antisymmetry_defects(vec, tab.labels)
        same = builders.clifford_oracle() == builders.spin_action()
        print(f"p8 antisymmetry {'OK' if not bad else f'FAILS on {len(bad)} cells'}, "
              f"spin table {'=' if same else '!='} Clifford oracle", file=out)
        ok &= not bad and same
    try:
        cases = catalog(args.algebra, alpha)
        print(f"{len(cases)} sl2-triples OK", file=out)
    except CatalogError as exc:
        print(f"sl2-triple check failed: {exc}", file=out)
        ok = False
    print("PASS" if ok else "FAIL", file=out)
    return 0 if ok else 1


def _emit(text: str, path, out) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def cmd_case(args, out) -> int:
    alpha = _alpha(args) if args.algebra == "d21" else None
    _load(args.algebra, alpha)
    try:
        case = get_case(args.algebra, args.name, alpha)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    r = case_report(case)
    _emit(to_json(r) if args.format == "json" else case_markdown(r), args.out, out)
    return 0 if r["ok"] else 1


def cmd_table(args, out) -> int:
    alpha = _alpha(args) if args.algebra == "d21" else None
    _load(args.algebra, alpha)
    reports = table_report(args.algebra, alpha, serial=args.serial)
    if args.format == "json":
        text = to_json(reports)
    else:
        text = table_markdown(reports) + "\n" + "\n".join(case_markdown(r) for r in reports)
    _emit(text, args.out, out)
    return 0 if all(r["ok"] for r in reports) else 1


def cmd_theorems(args, out) -> int:
    alpha = _alpha(args) if args.algebra == "d21" else None
    _load(args.algebra, alpha)
    entries = []
    for case in catalog(args.algebra, alpha):
        entries += verify_case(case)
    rep = TheoremReport(entries)
    _emit(rep.to_json() + "\n" if args.format == "json" else rep.to_markdown(), args.out, out)
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superz", description=(
        "Centralizers and centres of centralizers of nilpotent elements in "
        "D(2,1;alpha), G(3) and F(4), in exact arithmetic."))
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        sp.add_argument("algebra", type=str.lower, choices=ALGEBRAS)
        sp.add_argument("--alpha", help="rational value p/q for D(2,1;alpha) "
                        "(default: symbolic; env SUPERZ_ALPHA)")
        if fmt:
            sp.add_argument("--format", choices=("json", "md"), default="md")
            sp.add_argument("--out", help="write to a file instead of stdout")

    sp = sub.add_parser("verify", help="axioms, data-table cross-checks, sl2-triples")
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_verify)
    sp = sub.add_parser("case", help="full report for one orbit")
    common(sp)
    sp.add_argument("name", help='case name, e.g. "E+x2" or "e(7)"')
    sp.set_defaults(func=cmd_case)
    sp = sub.add_parser("table", help="all orbits of one algebra")
    common(sp)
    sp.add_argument("--serial", action="store_true", help="no worker processes")
    sp.set_defaults(func=cmd_table)
    sp = sub.add_parser("theorems", help="Theorems 1-3 on every orbit")
    common(sp)
    sp.set_defaults(func=cmd_theorems)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"superz: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: psi, spectrum, catalog, verify, audit.  Exit status is 0 when
everything checked holds, 1 when some claim fails (reports are still
emitted), and 2 for usage or environment errors.  JSON output is stable
ordered and exact: rationals appear as "num/den" strings and the document
carries a top-level schema version.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import theorems
from .enumeration import (
    DEFAULT_BOUND,
    HARD_CAP,
    EnumerationBoundError,
    catalog,
    psi_spectrum,
)
from .groups import GroupSpecError, TableError, build_group, parse_spec
from .theorems import (
    lemma5_check,
    lemma6_check,
    lemma7_check,
    mqr_formula_check,
    proof_inequality_audit,
    thm4_family_check,
    verify_equality_classification,
    verify_max_cyclic,
    verify_upper_bound,
)

SCHEMA = 1

CLAIMS = (
    "max_cyclic",
    "upper_bound",
    "equality",
    "thm4",
    "mqr",
    "lemma5",
    "lemma6",
    "lemma7",
)

MQR_STOCK = ((2, 4), (2, 5), (3, 3), (3, 4), (5, 3))


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # The same flags live on the main parser (with real defaults) and on each
    # subparser (defaulting to SUPPRESS), so they are accepted on either side
    # of the subcommand without a subparser default clobbering a given value.
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--format", choices=("table", "json", "csv"),
        default=d if suppress else "table",
        help="output format (default: table)",
    )
    parser.add_argument(
        "--cache-dir", default=d, help="directory for catalog persistence"
    )
    parser.add_argument(
        "--enum-bound", type=int, default=d if suppress else DEFAULT_BOUND,
        help=f"enumeration bound (default {DEFAULT_BOUND}, hard cap {HARD_CAP})",
    )
    parser.add_argument(
        "--acknowledge-slow", action="store_true",
        default=d if suppress else False,
        help="required to raise --enum-bound above the default",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordersum",
        description="Exact computation and verification for sums of element orders.",
    )
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _add_global_flags(p, suppress=True)
        return p

    p = add_command("psi", "sum of element orders of one group")
    p.add_argument("spec", help="group spec, e.g. C12, Q8, SD(5,4,2), C2xC2xC3, table:FILE")

    p = add_command("spectrum", "distinct psi values of all order-n groups")
    p.add_argument("n", type=int)

    p = add_command("catalog", "all isomorphism classes of order n")
    p.add_argument("n", type=int)

    p = add_command("verify", "run one verification claim")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--mkmax", type=int, default=200)
    p.add_argument("--spec", default=None, help="group spec (for upper_bound)")
    p.add_argument(
        "--family-only", action="store_true",
        help="restrict the equality claim to the construction family",
    )

    p = add_command("audit", "audit the proof-level numeric inequalities")
    p.add_argument("--qmax", type=int, default=97)
    p.add_argument("--pmax", type=int, default=199)
    p.add_argument("--smax", type=int, default=6)

    return parser


def _emit_reports(args, reports, command: str, extra: dict) -> int:
    ok = all(r.ok for r in reports)
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": command, **extra, "ok": ok,
               "reports": [theorems.report_to_dict(r) for r in reports]}
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        sys.stdout.write(theorems.reports_to_csv(reports))
    else:
        sys.stdout.write(theorems.reports_to_text(reports))
    return 0 if ok else 1


def _orders_in_play(args) -> list[int]:
    if args.n is None and args.nmax is None:
        raise GroupSpecError("this claim needs --n or --nmax")
    if args.n is not None:
        return [args.n]
    return list(range(2, args.nmax + 1))


def _run_psi(args) -> int:
    g = build_group(parse_spec(args.spec))
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": "psi", "spec": args.spec,
               "order": g.order, "psi": g.psi()}
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        print("spec,order,psi")
        print(f"{args.spec},{g.order},{g.psi()}")
    else:
        print(g.psi())
    return 0


def _run_spectrum(args) -> int:
    entries = psi_spectrum(args.n, bound=args.enum_bound, cache_dir=args.cache_dir)
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": "spectrum", "n": args.n,
               "entries": [{"psi": e.psi, "count": e.count, "witnesses": list(e.witnesses)}
                           for e in entries]}
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        print("psi,count,witnesses")
        for e in entries:
            print(f"{e.psi},{e.count},{'|'.join(e.witnesses)}")
    else:
        for e in entries:
            print(f"psi={e.psi}  classes={e.count}  {', '.join(e.witnesses)}")
    return 0


def _run_catalog(args) -> int:
    classes = catalog(args.n, bound=args.enum_bound, cache_dir=args.cache_dir)
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": "catalog", "n": args.n,
               "classes": [{"table": [list(r) for r in c.table.rows], "psi": c.psi,
                            "order_profile": [list(p) for p in c.order_profile],
                            "description": c.description}
                           for c in classes]}
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        print("index,psi,order_profile,description")
        for i, c in enumerate(classes):
            profile = ";".join(f"{d}:{cnt}" for d, cnt in c.order_profile)
            print(f"{i},{c.psi},{profile},{c.description}")
    else:
        print(f"{len(classes)} isomorphism classes of order {args.n}")
        for c in classes:
            profile = {d: cnt for d, cnt in c.order_profile}
            print(f"  psi={c.psi:<6} profile={profile}  {c.description}")
    return 0


def _run_verify(args) -> int:
    bound, cache = args.enum_bound, args.cache_dir
    reports = []
    if args.claim == "max_cyclic":
        for n in _orders_in_play(args):
            reports.append(verify_max_cyclic(n, bound=bound, cache_dir=cache))
    elif args.claim == "upper_bound":
        if args.spec is None or args.q is None:
            raise GroupSpecError("upper_bound needs --spec and --q")
        reports.append(verify_upper_bound(build_group(parse_spec(args.spec)), args.q))
    elif args.claim == "equality":
        for n in _orders_in_play(args):
            reports.append(
                verify_equality_classification(
                    n, args.q, bound=bound, cache_dir=cache, family_only=args.family_only
                )
            )
    elif args.claim == "thm4":
        if args.q is None or args.kmax is None:
            raise GroupSpecError("thm4 needs --q and --kmax")
        reports.append(thm4_family_check(args.q, args.kmax))
    elif args.claim == "mqr":
        if (args.q is None) != (args.r is None):
            raise GroupSpecError("mqr needs both --q and --r, or neither")
        pairs = MQR_STOCK if args.q is None else ((args.q, args.r),)
        for q, r in pairs:
            reports.append(mqr_formula_check(q, r))
    elif args.claim == "lemma5":
        reports.append(lemma5_check(args.mkmax))
    elif args.claim == "lemma6":
        reports.append(lemma6_check(args.mkmax))
    elif args.claim == "lemma7":
        for n in _orders_in_play(args):
            reports.append(lemma7_check(n, bound=bound, cache_dir=cache))
    return _emit_reports(args, reports, "verify", {"claim": args.claim})


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.enum_bound > DEFAULT_BOUND and not args.acknowledge_slow:
        parser.error(
            f"--enum-bound {args.enum_bound} exceeds the default {DEFAULT_BOUND}; "
            "pass --acknowledge-slow to confirm"
        )
    if args.enum_bound > HARD_CAP:
        parser.error(f"--enum-bound {args.enum_bound} exceeds the hard cap {HARD_CAP}")
    try:
        if args.command == "psi":
            return _run_psi(args)
        if args.command == "spectrum":
            return _run_spectrum(args)
        if args.command == "catalog":
            return _run_catalog(args)
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "audit":
            report = proof_inequality_audit(args.qmax, args.pmax, args.smax)
            return _emit_reports(args, [report], "audit", {})
    except (GroupSpecError, TableError, EnumerationBoundError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error.  JSON goes to
stdout; human-readable progress and pass/fail lines go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .lr import lr_coefficient, lr_types
from .multiplicity import (
    constituent_count,
    f,
    multiplicity_report,
    verify_D_equals_A,
    verify_lemma_tables,
    verify_prime_power,
    verify_theorem_A,
)
from .omega import omega, residue_decompose
from .partitions import (
    BoundError,
    SkewShape,
    format_partition,
    parse_partition,
    partition_count,
    require_odd_prime,
)
from .sylow import distribution, enumeration_oracle, sylow_order

log = logging.getLogger("sylowchar")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _status(ok: bool, label: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'}  {label}", file=sys.stderr)


def cmd_multiplicity(args) -> int:
    require_odd_prime(args.p)
    if args.lam is not None:
        value = f(args.p, args.n, args.lam)
        if args.json:
            _emit({"prime": args.p, "degree": args.n, "partition": list(args.lam),
                   "multiplicity": value})
        else:
            print(value)
        return EXIT_OK
    report = multiplicity_report(args.p, args.n, workers=args.threads)
    if args.json:
        sys.stdout.write(report.to_json() + "\n")
    else:
        width = max(len(format_partition(lam, compact=True)) for lam in report.entries)
        for lam, m in report.entries.items():
            print(f"{format_partition(lam, compact=True):<{width}}  {m}")
    return EXIT_OK


def cmd_verify_theorem_a(args) -> int:
    checks = verify_theorem_A(args.p, args.max_n, workers=args.threads)
    for c in checks:
        zs = " ".join(format_partition(x, compact=True) for x in c.computed) or "-"
        _status(c.passed, f"p={args.p} n={c.n} zero set: {zs}")
    ok = all(c.passed for c in checks)
    _emit({"subject": "theorem-a", "prime": args.p, "max_n": args.max_n, "passed": ok,
           "checks": [c.to_dict() for c in checks]})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_prime_power(args) -> int:
    c = verify_prime_power(args.p, args.k, workers=args.threads)
    zs = " ".join(format_partition(x, compact=True) for x in c.computed) or "-"
    _status(c.passed, f"p={args.p} n={c.n} zero set: {zs}")
    _emit({"subject": "prime-power", "prime": args.p, "k": args.k, **c.to_dict()})
    return EXIT_OK if c.passed else EXIT_FAIL


def cmd_verify_dset(args) -> int:
    report = verify_D_equals_A(args.q, args.p, args.k)
    ok = report.equal != args.expect_unequal
    what = "A = D" if report.equal else "A != D"
    _status(ok, f"q={args.q} p={args.p} k={args.k}: {what} over {report.scanned} partitions")
    for lam in report.only_in_A:
        print(f"      in A only: {format_partition(lam, compact=True)}", file=sys.stderr)
    for lam in report.only_in_D:
        print(f"      in D only: {format_partition(lam, compact=True)}", file=sys.stderr)
    _emit({"subject": "dset", "passed": ok, "expect_unequal": args.expect_unequal,
           **report.to_dict()})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_tables(args) -> int:
    rows = verify_lemma_tables(args.p, args.k)
    for r in rows:
        _status(r.passed, f"{r.source}: {format_partition(r.partition, compact=True)}"
                          f"  c={r.coefficient}")
    ok = all(r.passed for r in rows)
    _emit({"subject": "tables", "prime": args.p, "k": args.k, "passed": ok,
           "rows": [r.to_dict() for r in rows]})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_lr(args) -> int:
    c = lr_coefficient(args.lam, args.mu, args.nu)
    if args.json:
        _emit({"lambda": list(args.lam), "mu": list(args.mu), "nu": list(args.nu),
               "coefficient": c})
    else:
        print(c)
    return EXIT_OK


def cmd_lr_types(args) -> int:
    types = sorted(lr_types(SkewShape(args.outer, args.inner)), reverse=True)
    if args.json:
        _emit({"outer": list(args.outer), "inner": list(args.inner),
               "types": [list(t) for t in types]})
    else:
        print("[" + ", ".join(f"({format_partition(t)})" for t in types) + "]")
    return EXIT_OK


def cmd_omega(args) -> int:
    result = omega(args.lam, args.q)
    if args.json:
        d = residue_decompose(args.lam, args.q)
        _emit({"q": args.q, "lambda": list(args.lam), "omega": list(result), "zeta": d.zeta})
    else:
        print(format_partition(result))
    return EXIT_OK


def cmd_sylow_classes(args) -> int:
    dist = distribution(args.p, args.n)
    ok = True
    if args.oracle:
        ok = enumeration_oracle(args.p, args.n) == dist
        _status(ok, f"p={args.p} n={args.n}: recursion matches explicit enumeration")
    _emit({
        "prime": args.p,
        "degree": args.n,
        "order": str(sylow_order(args.p, args.n)),
        "classes": [{"type": list(t), "count": str(c)} for t, c in dist.counts.items()],
        **({"oracle_match": ok} if args.oracle else {}),
    })
    return EXIT_OK if ok else EXIT_FAIL


def cmd_constituent_count(args) -> int:
    count = constituent_count(args.p, args.n, workers=args.threads)
    if args.json:
        _emit({"prime": args.p, "degree": args.n, "constituents": count,
               "partitions": partition_count(args.n)})
    else:
        print(count)
    return EXIT_OK


def cmd_report(args) -> int:
    from .plotting import write_report_files

    report = multiplicity_report(args.p, args.n, workers=args.threads)
    delimiter = "\t" if args.delimiter in ("tab", "\\t") else args.delimiter
    if len(delimiter) != 1:
        raise UsageError("--delimiter must be a single character or 'tab'")
    paths = write_report_files(report, Path(args.out), fmt=args.format, delimiter=delimiter)
    for kind, path in paths.items():
        print(f"wrote {kind}: {path}", file=sys.stderr)
    checks = report.to_dict()["checks"]
    _emit({"prime": args.p, "degree": args.n,
           "zero_set": [list(x) for x in report.zero_set],
           "checks": checks, "files": {k: str(v) for k, v in paths.items()}})
    return EXIT_OK if all(checks.values()) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker processes for partition scans (default: all cores)")

    parser = argparse.ArgumentParser(
        prog="sylowchar",
        description="Trivial-character multiplicities of S_n irreducibles on Sylow p-subgroups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("multiplicity", parents=[common], help="f(lambda) for one or all lambda")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg)
    p.set_defaults(func=cmd_multiplicity)

    v = sub.add_parser("verify", help="run a verification driver")
    vs = v.add_subparsers(dest="subject", required=True)
    t = vs.add_parser("theorem-a", parents=[common])
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--max-n", type=int, required=True)
    t.set_defaults(func=cmd_verify_theorem_a)
    t = vs.add_parser("prime-power", parents=[common])
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    t.set_defaults(func=cmd_verify_prime_power)
    t = vs.add_parser("dset", parents=[common])
    t.add_argument("--q", type=int, required=True)
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--expect-unequal", action="store_true",
                   help="succeed only if A and D differ")
    t.set_defaults(func=cmd_verify_dset)
    t = vs.add_parser("tables", parents=[common])
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    t.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("lr-types", parents=[common], help="LR filling types of a skew shape")
    p.add_argument("--outer", type=_partition_arg, required=True)
    p.add_argument("--inner", type=_partition_arg, default=parse_partition(""))
    p.set_defaults(func=cmd_lr_types)

    p = sub.add_parser("omega", parents=[common], help="apply Omega_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("sylow-classes", parents=[common], help="cycle-type distribution of P_n")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check by explicit enumeration")
    p.set_defaults(func=cmd_sylow_classes)

    p = sub.add_parser("constituent-count", parents=[common], help="#{lambda : f(lambda) > 0}")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_constituent_count)

    p = sub.add_parser("report", parents=[common],
                       help="write a delimited table and a figure of f over P(n)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="reports")
    p.add_argument("--format", default="png", choices=["png", "pdf", "svg"])
    p.add_argument("--delimiter", default=",", help="field separator, or 'tab'")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except (ValueError, TypeError, BoundError, UsageError) as exc:
        print(f"sylowchar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

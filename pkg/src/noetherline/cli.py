"""Command-line front end.

    noetherline stratum --d 24 --d0 23
    noetherline moduli --pg 70 --format json
    noetherline profile --d 24 --format csv
    noetherline verify --from 5 --to 60

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import sys

from . import serialize as ser
from .errors import NoetherLineError
from .fibration import d0_range, invariants, validate, vanishing_monomials
from .moduli import delta_profile, moduli_summary, stratum_record
from .oracle import verify_range

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def cmd_stratum(args: argparse.Namespace) -> tuple[str, int]:
    f = validate(args.d, args.d0)
    record = stratum_record(f)
    if args.format == "json":
        return ser.to_json(ser.stratum_dict(record)), EXIT_OK
    if args.format == "csv":
        return ser.to_csv(ser.STRATUM_COLUMNS, [ser.stratum_row(record)]), EXIT_OK
    inv = invariants(f)
    vanishing = ", ".join(str(m) for m in vanishing_monomials(f)) or "-"
    return ser.to_keyvalue([
        ("type (d, d0)", f"({f.d}, {f.d0})"),
        ("e", f.e),
        ("p_g", inv.p_g),
        ("K^3", inv.K3),
        ("canonical image", record.image),
        ("singularity", record.singularity),
        ("vanishing monomials", vanishing),
        ("h0 branch", record.h0_branch),
        ("dim Aut", record.dim_aut),
        ("delta", record.delta),
        ("status", ser.status_name(record)),
        ("model", record.model.value),
    ]), EXIT_OK


def cmd_moduli(args: argparse.Namespace) -> tuple[str, int]:
    p_g = args.pg if args.pg is not None else 3 * args.d - 2
    summary = moduli_summary(p_g)
    if args.format == "json":
        return ser.to_json(ser.summary_dict(summary)), EXIT_OK
    rows = [ser.stratum_row(r) for r in summary.strata]
    if args.format == "csv":
        return ser.to_csv(ser.STRATUM_COLUMNS, rows), EXIT_OK
    head = [("p_g", summary.p_g), ("nonempty", str(summary.nonempty).lower())]
    if summary.nonempty:
        head += [
            ("d", summary.d),
            ("K^3", 4 * summary.d - 6),
            ("strata", summary.stratum_count),
            ("undetermined", summary.undetermined_count),
            ("components", f"{summary.components_lower} .. {summary.components_upper}"),
            ("dimension", summary.dimension),
            ("argmax d0", summary.argmax_d0),
        ]
        return ser.to_keyvalue(head) + "\n" + ser.to_table(ser.STRATUM_COLUMNS, rows), EXIT_OK
    return ser.to_keyvalue(head), EXIT_OK


def cmd_profile(args: argparse.Namespace) -> tuple[str, int]:
    profile = delta_profile(args.d)
    records = [stratum_record(validate(args.d, d0)) for d0 in d0_range(args.d)]
    if args.format == "json":
        return ser.to_json(ser.profile_dict(profile, records)), EXIT_OK
    rows = [ser.stratum_row(r) for r in records]
    if args.format == "csv":
        return ser.to_csv(ser.STRATUM_COLUMNS, rows), EXIT_OK
    segs = [
        {
            "d0 interval": str(s.interval),
            "delta": f"{s.slope}*d0 + {s.d_coeff}*d + {s.constant}",
            "value": f"{s.slope}*d0 + {s.d_coeff * args.d + s.constant}",
        }
        for s in profile.segments
    ]
    gaps = [{"breakpoint": str(x), "gap": str(g)} for x, g in profile.discontinuities]
    return "\n".join([
        ser.to_table(("d0 interval", "delta", "value"), segs),
        ser.to_table(("breakpoint", "gap"), gaps),
        ser.to_table(ser.STRATUM_COLUMNS, rows),
    ]), EXIT_OK


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    report = verify_range(args.d_min, args.d_max, workers=args.workers)
    code = EXIT_OK if report.ok else EXIT_FAILED
    doc = ser.report_dict(report)
    if args.format == "json":
        return ser.to_json(doc), code
    if args.format == "csv":
        return ser.to_csv(ser.FAILURE_COLUMNS, doc["failures"]), code
    text = f"d in [{report.d_min}, {report.d_max}]: {report.checks_run} checks, {len(report.failures)} failures\n"
    if report.failures:
        text += ser.to_table(ser.FAILURE_COLUMNS, doc["failures"])
    return text, code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noetherline",
        description="Strata of the moduli of canonical threefolds on the Noether line.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "table"), default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stratum", parents=[fmt], help="one stratum V_d(d0)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--d0", type=int, required=True)
    p.set_defaults(func=cmd_stratum)

    p = sub.add_parser("moduli", parents=[fmt], help="summary of the moduli space for one p_g")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--pg", type=int)
    which.add_argument("--d", type=int, help="shorthand for p_g = 3d - 2")
    p.set_defaults(func=cmd_moduli)

    p = sub.add_parser("profile", parents=[fmt], help="piecewise-linear delta_d and its integer table")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("verify", parents=[fmt], help="closed forms vs brute-force enumeration")
    p.add_argument("--from", dest="d_min", type=int, default=5)
    p.add_argument("--to", dest="d_max", type=int, default=60)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = args.func(args)
    except NoetherLineError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code

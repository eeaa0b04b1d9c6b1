"""Command line entry point: ``wreath <subcommand> --r R --n N ...``.

Exit status: 0 when every check passes, 1 on a verification failure, 2 on
usage errors or when |G| exceeds the order bound.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .characters import char_table
from .colored_perm import (
    ColoredPermutation,
    GroupTooLarge,
    check_order,
    class_type,
    configure_max_order,
)
from .model import conjecture_experiment
from .rsk import colored_rsk
from .verify import sqroot_row, sqroot_table, verify_all, verify_model

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--r", type=int, help="color modulus r >= 1")
    p.add_argument("--n", type=int, help="degree n >= 0")
    p.add_argument("--max-order", type=int, default=None,
                   help="bound on r^n * n! (default $WREATH_MAX_ORDER or 100000)")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--element", type=str, default=None, help='element as JSON, e.g. {"r":3,"n":2,"perm":[2,1],"colors":[0,1]}')
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="wreath", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("chartable", parents=[common], help="character table of G(r, n)")
    sub.add_parser("sqroots", parents=[common], help="absolute square roots per class")
    model = sub.add_parser("model", parents=[common], help="signed model: homomorphism and decomposition checks")
    model.add_argument("action", choices=["verify", "conjecture"])
    model.add_argument("--exhaustive", action="store_true", help="check the homomorphism on all pairs")
    sub.add_parser("rsk", parents=[common], help="colored RSK of one element")
    sub.add_parser("conjecture", parents=[common], help="cycle-count submodule experiment")
    va = sub.add_parser("verify-all", parents=[common], help="run every check on G(r, n)")
    va.add_argument("--exhaustive", action="store_true")
    return parser


def _require_rn(args) -> tuple[int, int]:
    if args.r is None or args.n is None:
        raise UsageError("--r and --n are required")
    if args.r < 1 or args.n < 0:
        raise UsageError("need r >= 1 and n >= 0")
    check_order(args.r, args.n)
    return args.r, args.n


def _element(args) -> ColoredPermutation:
    if args.element is None:
        raise UsageError("--element is required")
    try:
        g = ColoredPermutation.from_json(args.element)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad --element: {exc}") from exc
    if args.r is not None and args.r != g.r:
        raise UsageError("--r does not match the element")
    if args.n is not None and args.n != g.n:
        raise UsageError("--n does not match the element")
    return g


def _emit(obj, fmt: str, text: str | None = None, csv_text: str | None = None) -> None:
    if fmt == "text" and text is not None:
        print(text)
    elif fmt == "csv" and csv_text is not None:
        sys.stdout.write(csv_text)
    else:
        print(json.dumps(obj, indent=2))


def _rows_csv(rows: list[dict], keys: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(keys)
    for row in rows:
        w.writerow([json.dumps(row[k]) if isinstance(row[k], (list, dict)) else row[k] for k in keys])
    return buf.getvalue()


def cmd_chartable(args) -> int:
    r, n = _require_rn(args)
    table = char_table(r, n)
    text = table.to_text()
    _emit(table.to_json(), args.format, text=text, csv_text=table.to_csv())
    return EXIT_OK


def cmd_sqroots(args) -> int:
    if args.element is not None:
        g = _element(args)
        check_order(g.r, g.n)
        rows = [sqroot_row(class_type(g))]
        rows[0]["representative"] = g.to_json()
        r, n = g.r, g.n
    else:
        r, n = _require_rn(args)
        rows = sqroot_table(r, n, args.jobs)
    ok = all(row["pass"] for row in rows)
    keys = ["class", "bruteforce", "formula", "character_sum", "pass"]
    text = "\n".join(
        f"{json.dumps(row['class']):<40} {row['bruteforce']:>8} {row['formula']:>8} "
        f"{row['character_sum']:>8}  {'PASS' if row['pass'] else 'FAIL'}"
        for row in rows
    )
    _emit({"r": r, "n": n, "rows": rows, "pass": ok}, args.format, text=text, csv_text=_rows_csv(rows, keys))
    return EXIT_OK if ok else EXIT_FAIL


def _conjecture(args) -> int:
    r, n = _require_rn(args)
    reports = conjecture_experiment(r, n)
    invariant = all(rep.invariant for rep in reports)
    payload = {"r": r, "n": n, "groups": [rep.to_json() for rep in reports], "invariant": invariant}
    text = "\n".join(
        f"2-cycles={rep.two_cycles} cycles={rep.total_cycles} dim={rep.dimension} "
        f"invariant={rep.invariant} shapes={len(rep.shapes)} agrees={rep.holds}"
        for rep in reports
    )
    _emit(payload, args.format, text=text)
    # disagreement with the conjectured decomposition is reported, not an error
    return EXIT_OK if invariant else EXIT_FAIL


def cmd_model(args) -> int:
    if args.action == "conjecture":
        return _conjecture(args)
    r, n = _require_rn(args)
    report = verify_model(r, n, seed=args.seed, jobs=args.jobs, exhaustive=args.exhaustive)
    text = (f"homomorphism: {report['homomorphism']} ({report['homomorphism_scope']})\n"
            + "\n".join(f"{json.dumps(row['class']):<40} {row['model_character']:>8} "
                        f"{row['character_sum']:>8} {row['pass']}" for row in report["character_identity"])
            + "\nmultiplicities: " + ", ".join(str(m["multiplicity"]) for m in report["multiplicities"]))
    _emit(report, args.format, text=text)
    return EXIT_OK if report["pass"] else EXIT_FAIL


def cmd_rsk(args) -> int:
    g = _element(args)
    pair = colored_rsk(g)
    payload = {"element": g.to_json(), **pair.to_json(), "shape": [list(p) for p in pair.shape]}
    _emit(payload, args.format)
    return EXIT_OK


def cmd_verify_all(args) -> int:
    r, n = _require_rn(args)
    report = verify_all(r, n, seed=args.seed, jobs=args.jobs, exhaustive=args.exhaustive)
    rows = [c.to_json() for c in report.checks]
    _emit(report.to_json(), args.format, text=report.to_text(),
          csv_text=_rows_csv(rows, ["name", "scope", "pass", "wall_time"]))
    return EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {
    "chartable": cmd_chartable,
    "sqroots": cmd_sqroots,
    "model": cmd_model,
    "rsk": cmd_rsk,
    "conjecture": _conjecture,
    "verify-all": cmd_verify_all,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    configure_max_order(args.max_order)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GroupTooLarge) as exc:
        print(f"wreath: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        configure_max_order(None)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

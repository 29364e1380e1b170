"""Command-line surface.

Subcommands: gen, level, delta, verify, farey, series, svg.  Exit codes:
0 success (all checks pass), 1 verification failure, 2 usage error.  The
STERN3_MEMO_BUDGET environment variable caps memoization entries in the
term recursion.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from fractions import Fraction

from . import analytics, matrices, sequence, suites, svgfig
from . import farey as fareymap
from .indexing import level_range


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _seed(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"seed must be three comma-separated integers, got {text!r}")
    try:
        a, b, c = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be three comma-separated integers, got {text!r}")
    if min(a, b, c) < 0:
        raise argparse.ArgumentTypeError(f"seed components must be nonnegative, got {text!r}")
    return a, b, c


def _point(text: str) -> fareymap.RationalPoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"point must be two comma-separated rationals, got {text!r}")
    try:
        return fareymap.as_point((Fraction(parts[0]), Fraction(parts[1])))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"point must be two comma-separated rationals, got {text!r}")


def _emit_values(values: list[int], fmt: str, first_index: int, meta: dict) -> None:
    if fmt == "plain":
        print(",".join(map(str, values)))
    elif fmt == "csv":
        print("n,a_n")
        for offset, value in enumerate(values):
            print(f"{first_index + offset},{value}")
    else:
        print(json.dumps({**meta, "first_index": first_index, "terms": values}))


def cmd_gen(args) -> int:
    values = list(sequence.terms(args.count, args.seed))
    _emit_values(values, args.format, 1, {"seed": list(args.seed), "count": args.count})
    return 0


def cmd_level(args) -> int:
    if args.sum:
        print(analytics.level_sum(args.n, args.seed))
        return 0
    values = list(sequence.level_terms(args.n, args.seed))
    _emit_values(
        values, args.format, level_range(args.n)[0], {"seed": list(args.seed), "level": args.n}
    )
    return 0


def cmd_delta(args) -> int:
    table = analytics.delta_table(args.max_level)
    out = io.StringIO()
    if args.compare_paper:
        rows, notes = analytics.compare_reference_table(
            table if args.max_level >= 5 else None
        )
        matched = sum(r.match for r in rows)
        for r in rows:
            status = "match" if r.match else f"MISMATCH derived={r.derived}"
            out.write(f"row ({r.level},{r.value}) {' '.join(map(str, r.reference))}: {status}\n")
        out.write(f"matched {matched} of {len(rows)} reference rows\n")
        for note in notes:
            out.write(f"note: {note}\n")
    else:
        table.write_csv(out)
    text = out.getvalue()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    try:
        report = suites.run_suite(args.suite, args.max_level, args.depth, args.max_n)
    except KeyError:
        print(
            f"error: unknown suite {args.suite!r}; choose from all, "
            + ", ".join(sorted(suites.SUITES)),
            file=sys.stderr,
        )
        return 2
    failures = [c for c in report["checks"] if not c["pass"]]
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for check in report["checks"]:
            mark = "PASS" if check["pass"] else "FAIL"
            extra = f" ({check['counterexample']})" if check["counterexample"] else ""
            print(f"{mark} {check['name']}{extra}")
        print(f"{report['suite']}: {len(report['checks']) - len(failures)} passed, {len(failures)} failed")
    return 1 if failures else 0


def _fraction_pair(p: fareymap.RationalPoint) -> str:
    return (
        f"{p.x.numerator}/{p.x.denominator},{p.y.numerator}/{p.y.denominator}"
    )


def cmd_farey(args) -> int:
    point = args.point
    if not fareymap.in_domain(point):
        print(
            f"error: point {_fraction_pair(point)} is outside the triangle 0 <= y <= x <= 1",
            file=sys.stderr,
        )
        return 2
    digits: list[int] = []
    images: list[fareymap.RationalPoint] = []
    current = point
    for _ in range(args.digits):
        digits.append(fareymap.classify(current))
        try:
            current = fareymap.apply_map(current)
        except fareymap.ZeroDenominator:
            break
        images.append(current)
    print(" ".join(map(str, digits)))
    for step, image in enumerate(images, start=1):
        print(f"image {step}: {_fraction_pair(image)}")
    row = matrices.bottom_row(digits)
    print(f"bottom row: {row.v1},{row.v2},{row.v3}")
    return 0


def cmd_series(args) -> int:
    coeffs = matrices.series_coefficients(args.max_n)
    print(",".join(str(coeffs.coeff(n)) for n in range(1, args.max_n + 1)))
    return 0


def cmd_svg(args) -> int:
    if args.depth > svgfig.MAX_RENDER_DEPTH:
        print(
            f"error: depth {args.depth} exceeds the render guard {svgfig.MAX_RENDER_DEPTH}",
            file=sys.stderr,
        )
        return 2
    text = svgfig.render_subdivision(args.depth, args.label)
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stern3",
        description="Stern triatomic sequence: generation, verification, Farey expansion, "
        "series extraction and subdivision figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print the first terms of the sequence")
    p.add_argument("--count", type=_positive_int, required=True, help="number of terms")
    p.add_argument("--seed", type=_seed, default=(1, 1, 1), help="three seed values a,b,c")
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("level", help="print one level of the sequence, or its sum")
    p.add_argument("--n", type=_nonnegative_int, required=True, help="level number")
    p.add_argument("--sum", action="store_true", help="print only the level sum")
    p.add_argument("--seed", type=_seed, default=(1, 1, 1))
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p.set_defaults(handler=cmd_level)

    p = sub.add_parser("delta", help="occurrence-count table, or its comparison "
                                     "against the published reference table")
    p.add_argument("--max-level", type=_nonnegative_int, required=True)
    p.add_argument("--compare-paper", action="store_true",
                   help="compare derived counts against the published reference rows")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(handler=cmd_delta)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   help="all, " + ", ".join(sorted(suites.SUITES)))
    p.add_argument("--max-level", type=_nonnegative_int, default=4)
    p.add_argument("--depth", type=_nonnegative_int, default=None,
                   help="graph suite depth (defaults to --max-level)")
    p.add_argument("--max-n", type=_positive_int, default=None,
                   help="series suite index bound (defaults to the end of level min(max-level, 4))")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("farey", help="digit expansion of an exact rational point")
    p.add_argument("--point", type=_point, required=True, help='point "num/den,num/den"')
    p.add_argument("--digits", type=_positive_int, required=True)
    p.set_defaults(handler=cmd_farey)

    p = sub.add_parser("series", help="sequence terms via the generating series")
    p.add_argument("--max-n", type=_positive_int, required=True)
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("svg", help="render the subdivision figure")
    p.add_argument("--depth", type=_nonnegative_int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--label", choices=svgfig.LABEL_MODES, default="values")
    p.set_defaults(handler=cmd_svg)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    return args.handler(args)


if __name__ == "__main__":
    raise SystemExit(main())

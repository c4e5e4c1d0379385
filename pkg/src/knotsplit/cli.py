"""Command-line front end.

Exit codes: 0 on success (and verified identities), 1 when a verification
reports inequality, 2 on parse or usage errors.  Stdout is deterministic
for a fixed invocation and seed; timings go to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import cut as cutmod
from . import splitting
from .diagram import (
    DiagramFormatError,
    PlanarDiagram,
    bracket_state_sum,
    jones,
    parse_diagram,
)
from .partitions import SetPartition, enumerate_noncrossing
from .polyring import format_laurent, format_rational

FORMAT_ENV = "KNOTSPLIT_FORMAT"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotsplit",
        description="Exact Kauffman brackets, Jones polynomials, and "
        "splitting-formula verification over alternate cuts.",
    )
    parser.add_argument(
        "--format",
        choices=("text", "structured"),
        default=os.environ.get(FORMAT_ENV, "text"),
        help="output style (default from $KNOTSPLIT_FORMAT, else text)",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_input(p, what):
        p.add_argument("input", help=f"{what} file, or - for standard input")

    p = sub.add_parser("jones", help="Jones polynomial of a closed diagram")
    add_input(p, "diagram")
    p = sub.add_parser("bracket", help="Kauffman bracket of a closed diagram")
    add_input(p, "diagram")
    p = sub.add_parser("writhe", help="writhe of a closed diagram")
    add_input(p, "diagram")

    p = sub.add_parser("nc-enum", help="list noncrossing partitions in canonical order")
    p.add_argument("--n", type=int, required=True)

    for verb, help_text in (
        ("matrix", "print a splitting matrix"),
        ("det", "exact determinant of a splitting matrix"),
        ("invert", "exact inverse of a splitting matrix"),
    ):
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--kind", choices=splitting.MATRIX_KINDS, default="jones")
        p.add_argument("--allow-large", action="store_true",
                       help="override the size guard (n > 6)")

    p = sub.add_parser("surgeries", help="tabulate all noncrossing closures of one side")
    add_input(p, "cut presentation")
    p.add_argument("--side", type=int, choices=(1, 2), default=1)

    p = sub.add_parser("verify", help="verify splitting identities on a cut presentation")
    add_input(p, "cut presentation (ignored with --random)")
    p.add_argument(
        "--identity",
        choices=("expansion", "surgery", "splitting", "all"),
        default="splitting",
    )
    p.add_argument("--level", choices=("bracket", "jones"), default="jones")
    p.add_argument("--random", type=int, metavar="COUNT", default=0,
                   help="verify COUNT random cut presentations instead of a file")
    p.add_argument("--seed", type=int, default=0, help="seed for --random")
    p.add_argument("--n", type=int, default=2, help="boundary size for --random")
    p.add_argument("--max-crossings", type=int, default=4,
                   help="per-side crossing bound for --random")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_diagram(path: str) -> PlanarDiagram:
    return parse_diagram(_read_input(path))


def _load_cut(path: str) -> cutmod.CutPresentation:
    return cutmod.parse_cut(_read_input(path))


def _emit(pairs, fmt: str):
    """Print key/value pairs: structured mode as 'key value' lines, text
    mode as 'key: value'."""
    for key, value in pairs:
        if fmt == "structured":
            print(f"{key} {value}")
        else:
            print(f"{key}: {value}")


def _print_matrix(matrix, fmt: str):
    if fmt == "structured":
        print(f"kind {matrix.kind}")
        print(f"n {matrix.n}")
        print(f"size {matrix.size}")
        for i, p in enumerate(matrix.index):
            print(f"index {i} {p}")
        for i, row in enumerate(matrix.entries):
            for j, entry in enumerate(row):
                print(f"entry {i} {j} {format_laurent(entry, matrix.variable)}")
    else:
        print(f"{matrix.kind} matrix, n={matrix.n}, indexed by:")
        for i, p in enumerate(matrix.index):
            print(f"  [{i}] {p}")
        for row in matrix.entries:
            print("  | " + " | ".join(format_laurent(e, matrix.variable) for e in row) + " |")


def _print_report(report, fmt: str):
    verdict = "OK" if report.equal else "MISMATCH"
    pairs = [
        ("identity", report.identity),
        ("n", report.n),
        ("kind", report.kind),
        ("lhs", format_laurent(report.lhs, report.variable)),
        ("rhs", format_laurent(report.rhs, report.variable)),
        ("verdict", verdict),
    ]
    if report.detail:
        pairs.insert(3, ("detail", report.detail))
    _emit(pairs, fmt)
    print(f"time_ms {report.elapsed_ms:.1f}", file=sys.stderr)


def _run_verify(args, fmt: str) -> int:
    if args.random:
        cuts = [
            cutmod.random_cut_presentation(args.seed + i, args.n, args.max_crossings)
            for i in range(args.random)
        ]
    else:
        cuts = [_load_cut(args.input)]
    failures = 0
    for idx, cut in enumerate(cuts):
        if len(cuts) > 1:
            _emit([("case", idx)], fmt)
        reports = []
        if args.identity in ("expansion", "all"):
            reports.append(splitting.verify_bracket_expansion(cut))
        if args.identity in ("surgery", "all"):
            for p in enumerate_noncrossing(cut.n):
                for side in (1, 2):
                    reports.append(splitting.verify_surgery_expansion(cut, side, p))
        if args.identity in ("splitting", "all"):
            reports.append(splitting.verify_splitting(cut, args.level))
        for report in reports:
            _print_report(report, fmt)
            if not report.equal:
                failures += 1
    return 1 if failures else 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    try:
        if args.verb == "jones":
            print(format_laurent(jones(_load_diagram(args.input)), "t"))
        elif args.verb == "bracket":
            print(format_laurent(bracket_state_sum(_load_diagram(args.input)), "A"))
        elif args.verb == "writhe":
            print(_load_diagram(args.input).writhe())
        elif args.verb == "nc-enum":
            for p in enumerate_noncrossing(args.n):
                print(p)
        elif args.verb == "matrix":
            _print_matrix(splitting.build_matrix(args.n, args.kind, args.allow_large), fmt)
        elif args.verb == "det":
            matrix = splitting.build_matrix(args.n, args.kind, args.allow_large)
            det = splitting.determinant(matrix)
            print(format_laurent(det, matrix.variable))
        elif args.verb == "invert":
            matrix = splitting.build_matrix(args.n, args.kind, args.allow_large)
            result = splitting.invert_matrix(matrix, args.allow_large)
            if fmt == "structured":
                print(f"det {format_laurent(result.determinant, matrix.variable)}")
                for i, row in enumerate(result.adjugate):
                    for j, entry in enumerate(row):
                        print(f"adj {i} {j} {format_laurent(entry, matrix.variable)}")
                for i, row in enumerate(result.inverse):
                    for j, entry in enumerate(row):
                        print(f"inv {i} {j} {format_rational(entry, matrix.variable)}")
            else:
                print(f"det: {format_laurent(result.determinant, matrix.variable)}")
                print("inverse:")
                for row in result.inverse:
                    print(
                        "  | "
                        + " | ".join(format_rational(e, matrix.variable) for e in row)
                        + " |"
                    )
        elif args.verb == "surgeries":
            cut = _load_cut(args.input)
            for p in enumerate_noncrossing(cut.n):
                diagram = cutmod.surgery(cut, args.side, p)
                _emit(
                    [
                        ("partition", p),
                        ("writhe", diagram.writhe()),
                        ("bracket", format_laurent(bracket_state_sum(diagram), "A")),
                        ("jones", format_laurent(jones(diagram), "t")),
                    ],
                    fmt,
                )
        elif args.verb == "verify":
            return _run_verify(args, fmt)
    except (DiagramFormatError, cutmod.CutFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""``nekbound`` command line.

Exit codes: 0 ok, 2 input or usage error, 3 unknown builtin matrix,
4 a bound fell below the exact norm.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
from pathlib import Path

from . import __version__
from .bounds import BoundReport, best_bound
from .classify import DEFAULT_GUDKOV_LIMIT, classify
from .ensembles import random_nekrasov
from .errors import NekboundError, Singular, UnknownName
from .io import (
    BUILTIN_NAMES,
    NamedMatrix,
    bounds_text,
    builtin,
    classification_text,
    fmt4,
    load_matrix,
    report_dict,
    table_text,
)
from .prng import SplitMix64

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNKNOWN_BUILTIN = 3
EXIT_UNSOUND = 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _resolve(spec: str, fmt: str) -> NamedMatrix:
    path = Path(spec)
    if path.exists():
        try:
            return load_matrix(path, fmt)
        except OSError as exc:
            raise CliError(EXIT_INPUT, f"cannot read {spec}: {exc}") from None
        except (NekboundError, ValueError) as exc:
            raise CliError(EXIT_INPUT, f"{spec}: {exc}") from None
    if path.suffix or "/" in spec or "\\" in spec:
        raise CliError(EXIT_INPUT, f"no such file: {spec}")
    try:
        return builtin(spec)
    except UnknownName as exc:
        raise CliError(
            EXIT_UNKNOWN_BUILTIN, f"{exc}; builtins are {', '.join(BUILTIN_NAMES)}"
        ) from None


def _emit(args, text: str, payload) -> None:
    if args.output == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def _bounds(a, exact: bool) -> BoundReport:
    try:
        return best_bound(a, exact=exact)
    except Singular as exc:
        raise CliError(EXIT_INPUT, f"cannot compute exact norm: {exc}") from None


def cmd_classify(args) -> int:
    nm = _resolve(args.input, args.format)
    c = classify(nm.matrix, args.gudkov_limit)
    _emit(args, classification_text(nm.name, c), report_dict(nm.name, nm.matrix.shape[0], c))
    return EXIT_OK


def cmd_bound(args) -> int:
    nm = _resolve(args.input, args.format)
    b = _bounds(nm.matrix, args.exact)
    bad = b.violations()
    _emit(args, bounds_text(nm.name, b, bad), report_dict(nm.name, nm.matrix.shape[0], bounds=b))
    return EXIT_UNSOUND if bad else EXIT_OK


def cmd_report(args) -> int:
    nm = _resolve(args.input, args.format)
    c = classify(nm.matrix, args.gudkov_limit)
    b = _bounds(nm.matrix, args.exact)
    bad = b.violations()
    text = classification_text(nm.name, c) + bounds_text(nm.name, b, bad).split("\n", 1)[1]
    _emit(args, text, report_dict(nm.name, nm.matrix.shape[0], c, b))
    return EXIT_UNSOUND if bad else EXIT_OK


def _class_label(c) -> str:
    if c.is_sdd:
        return "SDD"
    if c.is_nekrasov:
        return "Nekrasov"
    if c.is_gudkov:
        return "Gudkov"
    return "H" if c.is_h_matrix else "none"


def paper_table_rows() -> list[dict]:
    rows = []
    for name in BUILTIN_NAMES:
        a = builtin(name).matrix
        b = best_bound(a, exact=True)
        rows.append(
            {
                "name": name,
                "class": _class_label(classify(a)),
                "exact": b.exact,
                "varah": b.varah,
                "bound2": b.bound2,
                "bound3": b.bound3,
            }
        )
    return rows


def cmd_paper_table(args) -> int:
    rows = paper_table_rows()
    text = table_text(
        ["Matrix", "class", "exact", "Varah", "(2)", "(3)"],
        [
            [r["name"], r["class"], fmt4(r["exact"]), fmt4(r["varah"]), fmt4(r["bound2"]), fmt4(r["bound3"])]
            for r in rows
        ],
    )
    _emit(args, text, rows)
    return EXIT_OK


def run_sweep(count: int, n: int, seed: int) -> dict:
    """Soundness sweep over seeded random Nekrasov matrices."""
    rng = SplitMix64(seed)
    t2, t3 = [], []
    wins = {"bound2": 0, "bound3": 0, "tie": 0}
    violations = []
    sdd = 0
    for k in range(count):
        b = best_bound(random_nekrasov(rng.split(), n), exact=True)
        if b.bound2 is None:
            # generator output is Nekrasov by construction
            violations.append({"index": k, "bound": "not-nekrasov"})
            continue
        sdd += b.varah is not None
        violations.extend({"index": k, "bound": v} for v in b.violations())
        t2.append(b.exact / b.bound2)
        t3.append(b.exact / b.bound3)
        if b.bound2 < b.bound3:
            wins["bound2"] += 1
        elif b.bound3 < b.bound2:
            wins["bound3"] += 1
        else:
            wins["tie"] += 1

    def stats(t):
        return {"min": min(t), "median": statistics.median(t)} if t else {"min": None, "median": None}

    return {
        "count": count,
        "n": n,
        "seed": seed,
        "violations": violations,
        "sdd_count": sdd,
        "tightness": {"bound2": stats(t2), "bound3": stats(t3)},
        "wins": wins,
    }


def _sweep_text(s: dict) -> str:
    def f(x):
        return "-" if x is None else f"{x:.6f}"

    t = s["tightness"]
    w = s["wins"]
    return "\n".join(
        [
            f"sweep: count={s['count']} n={s['n']} seed={s['seed']}",
            f"violations: {len(s['violations'])}",
            f"sdd subset (varah checked): {s['sdd_count']}",
            f"tightness exact/bound2: min {f(t['bound2']['min'])} median {f(t['bound2']['median'])}",
            f"tightness exact/bound3: min {f(t['bound3']['min'])} median {f(t['bound3']['median'])}",
            f"wins: bound2 {w['bound2']} bound3 {w['bound3']} ties {w['tie']}",
        ]
    ) + "\n"


def cmd_sweep(args) -> int:
    if args.count < 1 or args.n < 1:
        raise CliError(EXIT_INPUT, "--count and --n must be at least 1")
    s = run_sweep(args.count, args.n, args.seed)
    _emit(args, _sweep_text(s), s)
    return EXIT_UNSOUND if s["violations"] else EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nekbound",
        description="Classify matrices by diagonal dominance and bound ||A^-1||_inf.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["table", "json"], default="table")

    matrix = argparse.ArgumentParser(add_help=False)
    matrix.add_argument("input", help="path to a .mtx/.csv file or a builtin name (A1..A6)")
    matrix.add_argument("--format", choices=["auto", "mm", "matrix-market", "csv"], default="auto")
    matrix.add_argument("--gudkov-limit", type=_positive, default=DEFAULT_GUDKOV_LIMIT)

    exact = argparse.ArgumentParser(add_help=False)
    exact.add_argument("--exact", action="store_true", help="also compute the exact norm")

    p = sub.add_parser("classify", parents=[matrix, common], help="class membership and margins")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("bound", parents=[matrix, common, exact], help="inverse-norm bounds")
    p.set_defaults(func=cmd_bound)
    p = sub.add_parser("report", parents=[matrix, common, exact], help="classification and bounds")
    p.set_defaults(func=cmd_report)
    p = sub.add_parser("paper-table", parents=[common], help="bounds for the six built-in matrices")
    p.set_defaults(func=cmd_paper_table)
    p = sub.add_parser("sweep", parents=[common], help="random soundness sweep")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"nekbound: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command line interface to the counting engines.

Subcommands: check, reduce, sons, count, alpha, eco-matrix, gf, verify.
Every command accepts ``--format table|csv|json`` (default table) and
``--out FILE`` to write to a file instead of standard output. Counts are
serialized as decimal strings in JSON so no magnitude is ever rounded.

Exit codes: 0 success (for verify: every grid cell agrees), 1 usage error,
2 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Iterable, Optional, Sequence

from . import closedforms, counting, series, succession
from .patterns import (
    DashedPattern,
    is_type_12,
    find_occurrence,
    parse_pattern,
    parse_pattern_set,
    pattern_set_id,
)
from .words import format_word, parse_word, reduce_word

BRUTE_FORCE_LEAF_LIMIT = 10**9

RULES: dict[str, Callable[[], succession.SuccessionRule]] = {
    "1-12,2-21": succession.rule_1_12__2_21,
    "1-21,2-12": succession.rule_1_21__2_12,
    "1-11,1-12": succession.rule_1_11__1_12,
}

FORMULA_TOTALS: dict[str, Callable[..., int]] = {
    "1-12,2-21": closedforms.total_1_12__2_21,
    "1-21,2-12": closedforms.total_1_21__2_12,
}

FORMULA_ALPHAS: dict[str, Callable[[int, int, int], int]] = {
    "1-12,2-21": closedforms.alpha_1_12__2_21,
    "1-21,2-12": closedforms.alpha_1_21__2_12,
}

GF_TOTALS: dict[str, Callable[[int, int], list[int]]] = {
    "1-11,1-12": series.gf_total_1_11__1_12,
    "1-11,1-21": series.gf_1_11__1_21,
    "1-11,1-22": series.gf_1_11__1_22,
    "1-22,2-11": series.gf_2_11__1_22,
}

GF_NOTES: dict[str, str] = {
    "1-11,1-21": "k=0 summand fixed to 1 (empty word); calibrated against enumeration",
    "1-22,2-11": "k=0 summand fixed to 1 and summands carry x^k; calibrated against enumeration",
}

# The six classes with no closed form; countable by the generic engines.
OPEN_CLASSES = [
    "1-12,1-21",
    "1-12,1-22",
    "1-12,2-11",
    "1-12,2-12",
    "1-21,1-22",
    "1-21,2-11",
]

DEFAULT_VERIFY_CLASSES = sorted(
    {"1-12,2-21", "1-21,2-12", "1-11,1-12", "1-11,1-21", "1-11,1-22", "1-22,2-11"}
    | set(OPEN_CLASSES)
)


class CliError(Exception):
    """Bad input on the command line; reported and mapped to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dumps(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv_text(rows: Iterable[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(list(row))
    return buf.getvalue()


def _patterns_arg(text: str) -> tuple[DashedPattern, ...]:
    try:
        return parse_pattern_set(text)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _canonical_id(patterns: Iterable[DashedPattern]) -> str:
    return pattern_set_id(patterns)


def _guard_brute(m: int, n: int, force: bool) -> None:
    if m**n > BRUTE_FORCE_LEAF_LIMIT and not force:
        raise CliError(
            f"brute force over {m}^{n} candidate leaves exceeds {BRUTE_FORCE_LEAF_LIMIT}; "
            "pass --force to run anyway"
        )


def _count_states(patterns: tuple[DashedPattern, ...], m: int, n: int) -> int:
    table = counting.state_count(patterns, n, m)
    return sum(series.binomial(m, k) * table.value(n, k) for k in range(min(n, m) + 1))


def _count_tree(cid: str, m: int, n: int) -> int:
    if cid not in RULES:
        raise CliError(f"no succession rule is available for the class {cid!r}")
    if n == 0:
        return 1
    rule = RULES[cid]()
    table = succession.alpha_table_from_tree(rule, n, m)
    return sum(series.binomial(m, k) * table.value(n, k) for k in range(min(n, m) + 1))


def _count_formula(cid: str, m: int, n: int, short_tail: bool) -> int:
    if cid not in FORMULA_TOTALS:
        raise CliError(f"no closed formula is available for the class {cid!r}")
    if cid == "1-12,2-21":
        return closedforms.total_1_12__2_21(n, m, short_tail=short_tail)
    return FORMULA_TOTALS[cid](n, m)


def _count_gf(cid: str, m: int, n: int) -> int:
    if cid not in GF_TOTALS:
        raise CliError(f"no generating function is available for the class {cid!r}")
    return GF_TOTALS[cid](m, n)[n]


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_check(args: argparse.Namespace) -> int:
    pattern = parse_pattern(args.pattern)
    word = parse_word(args.word)
    witness = find_occurrence(pattern, word)
    contains = witness is not None
    positions = [i + 1 for i in witness] if witness else []
    if args.format == "json":
        text = _json_dumps(
            {
                "pattern": str(pattern),
                "word": format_word(word),
                "contains": contains,
                "witness": positions,
            }
        )
    elif args.format == "csv":
        text = _csv_text(
            [
                ["pattern", "word", "contains", "witness"],
                [str(pattern), format_word(word), contains, " ".join(map(str, positions))],
            ]
        )
    else:
        verdict = "contains" if contains else "avoids"
        lines = [f"pattern {pattern}", f"word    {format_word(word)}", f"result  {verdict}"]
        if contains:
            lines.append("witness positions " + " ".join(map(str, positions)))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    word = parse_word(args.word)
    reduced = reduce_word(word)
    if args.format == "json":
        text = _json_dumps({"word": format_word(word), "reduced": format_word(reduced)})
    elif args.format == "csv":
        text = _csv_text([["word", "reduced"], [format_word(word), format_word(reduced)]])
    else:
        text = format_word(reduced) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_sons(args: argparse.Namespace) -> int:
    word = parse_word(args.word)
    patterns = _patterns_arg(args.patterns)
    try:
        produced = counting.sons(word, patterns, args.m)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    strings = [format_word(w) for w in produced]
    if args.format == "json":
        text = _json_dumps(
            {
                "word": format_word(word),
                "patterns": _canonical_id(patterns),
                "m": args.m,
                "sons": strings,
            }
        )
    elif args.format == "csv":
        text = _csv_text([["son"]] + [[s] for s in strings])
    else:
        text = "".join(s + "\n" for s in strings)
    _emit(text, args.out)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    patterns = _patterns_arg(args.patterns)
    cid = _canonical_id(patterns)
    m, n = args.m, args.n
    method = args.method
    if method == "brute":
        _guard_brute(m, n, args.force)
        value = counting.brute_force_total(patterns, m, n)
    elif method == "states":
        try:
            value = _count_states(patterns, m, n)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    elif method == "tree":
        value = _count_tree(cid, m, n)
    elif method == "formula":
        value = _count_formula(cid, m, n, args.short_tail)
    elif method == "gf":
        value = _count_gf(cid, m, n)
    else:  # lifted
        value = counting.lifted_total(patterns, m, n)
    if args.format == "json":
        text = _json_dumps(
            {"patterns": cid, "m": m, "n": n, "method": method, "count": str(value)}
        )
    elif args.format == "csv":
        text = _csv_text([["patterns", "m", "n", "method", "count"], [cid, m, n, method, value]])
    else:
        text = f"{value}\n"
    _emit(text, args.out)
    return 0


def _alpha_matrix(args: argparse.Namespace, patterns: tuple[DashedPattern, ...], cid: str):
    n_max, m = args.n_max, args.m
    if args.method == "generate":
        return counting.alpha_table(patterns, n_max, m)
    if args.method == "states":
        try:
            return counting.state_count(patterns, n_max, m)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    if args.method == "tree":
        if cid not in RULES:
            raise CliError(f"no succession rule is available for the class {cid!r}")
        return succession.alpha_table_from_tree(RULES[cid](), n_max, m)
    # formula
    if cid not in FORMULA_ALPHAS:
        raise CliError(f"no closed alpha formula is available for the class {cid!r}")
    alpha = FORMULA_ALPHAS[cid]
    table = counting.AlphaMatrix(n_max, min(n_max, m), {})
    for n in range(n_max + 1):
        for k in range(min(n, m) + 1):
            value = alpha(n, k, m)
            if value:
                table.entries[(n, k)] = value
    return table


def _cmd_alpha(args: argparse.Namespace) -> int:
    patterns = _patterns_arg(args.patterns)
    cid = _canonical_id(patterns)
    table = _alpha_matrix(args, patterns, cid)
    rows = table.rows()
    if args.format == "json":
        text = _json_dumps(
            {
                "patterns": cid,
                "m": args.m,
                "n_max": args.n_max,
                "method": args.method,
                "rows": [[str(v) for v in row] for row in rows],
            }
        )
    elif args.format == "csv":
        header = ["n"] + [f"k{k}" for k in range(table.k_max + 1)]
        text = _csv_text([header] + [[n] + row for n, row in enumerate(rows)])
    else:
        width = max(len(str(v)) for row in rows for v in row)
        lines = [
            f"n={n:<3d} " + " ".join(f"{v:>{width}d}" for v in row)
            for n, row in enumerate(rows)
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_eco_matrix(args: argparse.Namespace) -> int:
    patterns = _patterns_arg(args.patterns)
    cid = _canonical_id(patterns)
    if cid not in RULES:
        raise CliError(f"no succession rule is available for the class {cid!r}")
    rule = RULES[cid]()
    names, rows = succession.eco_matrix(rule, args.m, args.levels)
    if args.format == "json":
        text = _json_dumps(
            {
                "patterns": cid,
                "m": args.m,
                "labels": names,
                "rows": [[str(v) for v in row] for row in rows],
            }
        )
    elif args.format == "csv":
        text = succession.eco_matrix_csv(rule, args.m, args.levels)
    else:
        widths = [max(len(name), max(len(str(row[i])) for row in rows)) for i, name in enumerate(names)]
        header = "level " + " ".join(f"{name:>{w}s}" for name, w in zip(names, widths))
        lines = [header]
        for n, row in enumerate(rows, start=1):
            lines.append(f"{n:<5d} " + " ".join(f"{v:>{w}d}" for v, w in zip(row, widths)))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_gf(args: argparse.Namespace) -> int:
    patterns = _patterns_arg(args.patterns)
    cid = _canonical_id(patterns)
    if cid not in GF_TOTALS:
        raise CliError(f"no generating function is available for the class {cid!r}")
    coeffs = GF_TOTALS[cid](args.m, args.order)
    note = GF_NOTES.get(cid)
    if args.format == "json":
        payload = {
            "patterns": cid,
            "m": args.m,
            "order": args.order,
            "coefficients": [str(c) for c in coeffs],
        }
        if note:
            payload["note"] = note
        text = _json_dumps(payload)
    elif args.format == "csv":
        text = _csv_text([["exponent", "coefficient"]] + [[n, c] for n, c in enumerate(coeffs)])
    else:
        lines = [f"x^{n}: {c}" for n, c in enumerate(coeffs)]
        if note:
            lines.append(f"note: {note}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _verify_cells(args: argparse.Namespace) -> list[dict[str, object]]:
    cells: list[dict[str, object]] = []
    for class_text in args.classes:
        patterns = _patterns_arg(class_text)
        cid = _canonical_id(patterns)
        all_type_12 = all(is_type_12(p) for p in patterns)
        for m in range(1, args.m_max + 1):
            _guard_brute(m, args.n_max, args.force)
            alpha = counting.alpha_table(patterns, args.n_max, m)
            states = counting.state_count(patterns, args.n_max, m) if all_type_12 else None
            tree = (
                succession.alpha_table_from_tree(RULES[cid](), args.n_max, m)
                if cid in RULES
                else None
            )
            gf = GF_TOTALS[cid](m, args.n_max) if cid in GF_TOTALS else None
            for n in range(args.n_max + 1):
                k_top = min(n, m) + 1
                values: dict[str, int] = {
                    "brute": counting.brute_force_total(patterns, m, n),
                    "lifted": sum(
                        series.binomial(m, k) * alpha.value(n, k) for k in range(k_top)
                    ),
                }
                if states is not None:
                    values["states"] = sum(
                        series.binomial(m, k) * states.value(n, k) for k in range(k_top)
                    )
                if tree is not None:
                    values["tree"] = sum(
                        series.binomial(m, k) * tree.value(n, k) for k in range(k_top)
                    )
                if cid in FORMULA_TOTALS:
                    values["formula"] = _count_formula(cid, m, n, args.short_tail)
                if gf is not None:
                    values["gf"] = gf[n]
                agree = len(set(values.values())) == 1
                cells.append(
                    {"patterns": cid, "m": m, "n": n, "values": values, "agree": agree}
                )
    cells.sort(key=lambda cell: (cell["patterns"], cell["m"], cell["n"]))
    return cells


def _cmd_verify(args: argparse.Namespace) -> int:
    cells = _verify_cells(args)
    mismatches = [c for c in cells if not c["agree"]]
    if args.format == "json":
        text = _json_dumps(
            {
                "cells": [
                    {
                        "patterns": c["patterns"],
                        "m": c["m"],
                        "n": c["n"],
                        "values": {k: str(v) for k, v in c["values"].items()},
                        "agree": c["agree"],
                    }
                    for c in cells
                ],
                "mismatches": len(mismatches),
            }
        )
    elif args.format == "csv":
        methods = ["brute", "states", "lifted", "tree", "formula", "gf"]
        header = ["patterns", "m", "n"] + methods + ["agree"]
        rows: list[list[object]] = [header]
        for c in cells:
            vals = c["values"]
            rows.append(
                [c["patterns"], c["m"], c["n"]]
                + [vals.get(meth, "") for meth in methods]
                + [c["agree"]]
            )
        text = _csv_text(rows)
    else:
        lines = []
        for c in cells:
            vals = " ".join(f"{k}={v}" for k, v in sorted(c["values"].items()))
            status = "ok" if c["agree"] else "MISMATCH"
            lines.append(f"{c['patterns']:<12s} m={c['m']} n={c['n']:<2d} {vals} {status}")
        lines.append(
            f"cells={len(cells)} mismatches={len(mismatches)} "
            + ("ALL AGREE" if not mismatches else "MISMATCH")
        )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 2 if mismatches else 0


# ---------------------------------------------------------------------------
# Parser wiring


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format", choices=["table", "csv", "json"], default="table", help="output format"
    )
    sub.add_argument("--out", metavar="FILE", default=None, help="write output to FILE")


def build_parser() -> _Parser:
    parser = _Parser(prog="avoidwords", description=__doc__.splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = subparsers.add_parser("check", help="test whether a word contains a pattern")
    p.add_argument("pattern")
    p.add_argument("word")
    _add_common(p)
    p.set_defaults(func=_cmd_check)

    p = subparsers.add_parser("reduce", help="rank a word's letters down to 1..k")
    p.add_argument("word")
    _add_common(p)
    p.set_defaults(func=_cmd_reduce)

    p = subparsers.add_parser("sons", help="grow a reduced avoiding word by one letter")
    p.add_argument("word")
    p.add_argument("patterns", help="comma-separated pattern set (may be empty)")
    p.add_argument("-m", type=int, required=True, help="alphabet size")
    _add_common(p)
    p.set_defaults(func=_cmd_sons)

    p = subparsers.add_parser("count", help="count avoiding words of one length")
    p.add_argument("patterns")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument(
        "--method",
        choices=["brute", "states", "lifted", "tree", "formula", "gf"],
        default="brute",
    )
    p.add_argument("--force", action="store_true", help="skip the brute-force size guard")
    p.add_argument(
        "--short-tail",
        action="store_true",
        help="use the knowingly wrong stabilized-sum variant of the 1-12,2-21 formula",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_count)

    p = subparsers.add_parser("alpha", help="table of reduced-avoider counts by (n, k)")
    p.add_argument("patterns")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument(
        "--method", choices=["generate", "states", "tree", "formula"], default="generate"
    )
    _add_common(p)
    p.set_defaults(func=_cmd_alpha)

    p = subparsers.add_parser("eco-matrix", help="label distribution per tree level")
    p.add_argument("patterns", help="class with a built-in succession rule")
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_eco_matrix)

    p = subparsers.add_parser("gf", help="series coefficients for a class with a known gf")
    p.add_argument("patterns")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-N", "--order", type=int, default=16, dest="order")
    _add_common(p)
    p.set_defaults(func=_cmd_gf)

    p = subparsers.add_parser("verify", help="cross-check every applicable method on a grid")
    p.add_argument(
        "--classes",
        nargs="*",
        default=DEFAULT_VERIFY_CLASSES,
        help="pattern sets to verify (default: the ten built-in classes)",
    )
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--force", action="store_true")
    p.add_argument(
        "--short-tail",
        action="store_true",
        help="inject the wrong 1-12,2-21 formula variant to demonstrate mismatch reporting",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"avoidwords: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"avoidwords: error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command-line front end: verify claims, compute statistics and bijections,
emit tables and series expansions.

Exit codes: 0 all good, 1 counterexample or input outside an operation's
domain, 2 usage error (including bound violations without the override flag).
Output is deterministic; the timestamp (and timing fields) disappear under
--no-timestamp so byte-identical reruns are possible.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from . import bijections, oracle, regex, series, tilings
from .compositions import Composition, fib
from .errors import PermfibError, ResourceLimitError
from .permutations import (
    Permutation,
    contains_descending_run,
    descent_composition,
    enumeration_cap,
    inverse_letters,
    left_peak_count,
    letter_tuples,
    statistics,
)
from .words import (
    check_word,
    forbidden_factors,
    is_avoiding_block_word,
    is_block_word,
    iter_block_words,
    iter_words,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2

#: Claims runnable through ``permfib verify --claim``.
CLAIM_NAMES = (
    "theorem1",
    "theorem2",
    "theorem4",
    "corollaries",
    "prop6",
    "prop7",
    "prop8",
    "eq1",
    "gf3",
    "gf5",
    "gf-general",
)

#: Enumeration-heavy claims refuse n-max beyond this without --unsafe-large-n.
SAFE_N_MAX = 9

TABLE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "kind": {"type": "string"},
        "params": {"type": "object"},
        "columns": {"type": "array", "items": {"type": "string"}},
        "rows": {"type": "array", "items": {"type": "array"}},
        "note": {"type": "string"},
        "timestamp": {"type": "string"},
    },
    "required": ["kind", "params", "columns", "rows"],
    "additionalProperties": False,
}

FIB_INDEXING_NOTE = (
    "indexing starts at f(0) = 1; OEIS offsets for the same sequences differ"
)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PermfibError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permfib",
        description="Permutation statistics, block-word bijections, and "
        "Fibonacci-flavored counting identities, checked by exhaustive "
        "enumeration and exact series arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--output", help="write to this path instead of stdout")
        p.add_argument(
            "--no-timestamp",
            action="store_true",
            help="omit timestamps and timing fields for byte-stable output",
        )

    verify = sub.add_parser("verify", help="run claim suites against the oracles")
    verify.add_argument(
        "--claim",
        default="all",
        help="comma list from: all, " + ", ".join(CLAIM_NAMES),
    )
    verify.add_argument("--n-max", type=int, default=7)
    verify.add_argument("--k-max", type=int, default=10, help="width bound for prop8")
    verify.add_argument("--m", default=None, help="comma list of pattern lengths")
    verify.add_argument(
        "--unsafe-large-n",
        action="store_true",
        help=f"allow n-max beyond {SAFE_N_MAX} (up to the enumeration cap)",
    )
    common(verify)
    verify.set_defaults(func=_cmd_verify)

    stats = sub.add_parser("stats", help="statistics of one permutation")
    stats.add_argument("--perm", required=True)
    common(stats)
    stats.set_defaults(func=_cmd_stats)

    biject = sub.add_parser("biject", help="map a permutation, word, or composition")
    group = biject.add_mutually_exclusive_group(required=True)
    group.add_argument("--perm")
    group.add_argument("--word")
    group.add_argument("--composition")
    common(biject)
    biject.set_defaults(func=_cmd_biject)

    table = sub.add_parser("table", help="deterministic count/coefficient tables")
    table.add_argument(
        "--kind",
        required=True,
        choices=("fib", "counts-thm1", "counts-thm2", "gf-coeffs", "descent-matrix"),
    )
    table.add_argument("--n-max", type=int, default=8)
    table.add_argument("--m", default=None)
    table.add_argument(
        "--order",
        type=int,
        default=None,
        help="Fibonacci order for --kind fib (default 2), "
        "truncation order for --kind gf-coeffs (default n-max)",
    )
    table.add_argument("--unsafe-large-n", action="store_true")
    common(table)
    table.set_defaults(func=_cmd_table)

    ser = sub.add_parser("series", help="print exact series expansions")
    ser.add_argument(
        "--kind",
        required=True,
        choices=("substitution-inverse", "fib-ogf", "ilpk-ogf"),
    )
    ser.add_argument("--m", type=int, default=3)
    ser.add_argument("--order", type=int, default=8)
    common(ser)
    ser.set_defaults(func=_cmd_series)

    return parser


# ---------------------------------------------------------------------------
# Output helpers


def _timestamp(args) -> str | None:
    if args.no_timestamp:
        return None
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload: dict[str, Any]) -> None:
    stamp = _timestamp(args)
    if stamp is not None:
        payload["timestamp"] = stamp
    _emit(args, json.dumps(payload, indent=2))


def _emit_table(args, kind: str, params: dict[str, Any], columns: list[str],
                rows: list[list[Any]], note: str | None = None) -> None:
    if args.format == "csv":
        lines = [",".join(columns)]
        lines += [",".join(str(cell) for cell in row) for row in rows]
        _emit(args, "\n".join(lines))
    elif args.format == "json":
        payload: dict[str, Any] = {
            "kind": kind,
            "params": params,
            "columns": columns,
            "rows": rows,
        }
        if note:
            payload["note"] = note
        _emit_json(args, payload)
    else:
        widths = [
            max(len(str(col)), *(len(str(row[i])) for row in rows)) if rows else len(col)
            for i, col in enumerate(columns)
        ]
        lines = []
        stamp = _timestamp(args)
        if stamp is not None:
            lines.append(f"generated-at: {stamp}")
        if note:
            lines.append(f"note: {note}")
        lines.append("  ".join(col.ljust(widths[i]) for i, col in enumerate(columns)))
        for row in rows:
            lines.append("  ".join(str(cell).ljust(widths[i]) for i, cell in enumerate(row)))
        _emit(args, "\n".join(lines))


def _parse_int_list(raw: str | None, default: tuple[int, ...]) -> tuple[int, ...]:
    if raw is None:
        return default
    try:
        values = tuple(int(tok) for tok in raw.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"expected a comma list of integers, got {raw!r}")
    if not values:
        raise UsageError("empty list")
    return values


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    try:
        claims = _selected_claims(args.claim)
        _check_bounds(args, claims)
        ms_default = {"theorem1": (3, 4, 5), "prop6": (3,), "prop7": (3,), "gf-general": (3, 4)}
        reports: list[oracle.VerificationReport] = []
        for claim in claims:
            runner = _CLAIM_RUNNERS[claim]
            ms = _parse_int_list(args.m, ms_default.get(claim, (3,)))
            reports.extend(runner(args, ms))
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    include_millis = not args.no_timestamp
    if args.format == "json":
        payload = {
            "reports": [r.to_json_dict(include_millis=include_millis) for r in reports],
            "all_pass": all(r.passed for r in reports),
        }
        _emit_json(args, payload)
    elif args.format == "csv":
        lines = ["claim,pass,params"]
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            lines.append(f"{r.claim},{str(r.passed).lower()},{params}")
        _emit(args, "\n".join(lines))
    else:
        lines = []
        stamp = _timestamp(args)
        if stamp is not None:
            lines.append(f"generated-at: {stamp}")
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            params = ", ".join(f"{k}={v}" for k, v in r.params.items())
            suffix = f"  [{r.millis} ms]" if include_millis else ""
            lines.append(f"{status}  {r.claim}  ({params}){suffix}")
            if r.counterexample is not None:
                lines.append(f"      counterexample: {r.counterexample}")
        lines.append("result: " + ("all claims pass" if all(r.passed for r in reports) else "FAILURES FOUND"))
        _emit(args, "\n".join(lines))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_COUNTEREXAMPLE


def _selected_claims(raw: str) -> tuple[str, ...]:
    tokens = tuple(tok.strip() for tok in raw.split(",") if tok.strip())
    if not tokens:
        raise UsageError("no claim selected")
    if "all" in tokens:
        return CLAIM_NAMES
    for token in tokens:
        if token not in CLAIM_NAMES:
            raise UsageError(f"unknown claim {token!r}; choose from {', '.join(CLAIM_NAMES)}")
    return tokens


def _check_bounds(args, claims: Iterable[str]) -> None:
    heavy = {"theorem1", "theorem2", "theorem4", "corollaries", "prop6", "gf-general"}
    if any(c in heavy for c in claims):
        if args.n_max > SAFE_N_MAX and not args.unsafe_large_n:
            raise UsageError(
                f"--n-max {args.n_max} exceeds the safe bound {SAFE_N_MAX}; "
                "pass --unsafe-large-n to proceed"
            )
        if args.n_max > enumeration_cap():
            raise UsageError(
                f"--n-max {args.n_max} exceeds the enumeration cap {enumeration_cap()} "
                "(set PERMFIB_MAX_N to raise it)"
            )
    if "prop7" in claims and args.n_max > 12:
        raise UsageError("prop7 enumerates all 3^n words; --n-max is capped at 12")
    if "prop8" in claims and args.k_max > 12:
        raise UsageError("prop8 enumerates tilings; --k-max is capped at 12")
    if args.n_max < 1:
        raise UsageError("--n-max must be >= 1")


def _claim_theorem1(args, ms) -> list:
    reports = []
    for m in ms:
        report = oracle.VerificationReport(
            claim="theorem1", params={"m": m, "n_max": args.n_max}
        )
        report.passed = True
        for n in range(1, args.n_max + 1):
            got = oracle.count_ipk0_avoiders(n, m, allow_large=args.unsafe_large_n)
            expected = fib(m - 1, n)
            if got != expected:
                report.passed = False
                report.counterexample = {"n": n, "count": got, "fibonacci": expected}
                break
        reports.append(report)
    return reports


def _claim_theorem2(args, ms) -> list:
    report = oracle.VerificationReport(claim="theorem2", params={"n_max": args.n_max})
    report.passed = True
    for n in range(1, args.n_max + 1):
        got = oracle.count_ilpk1_avoiders(n, 3, allow_large=args.unsafe_large_n)
        expected = fib(2, n - 1) * fib(2, n) - (n + 1) // 2
        if got != expected:
            report.passed = False
            report.counterexample = {"n": n, "count": got, "closed_form": expected}
            break
    return [report]


def _claim_theorem4(args, ms) -> list:
    return [oracle.verify_descent_uniqueness(n) for n in range(1, args.n_max + 1)]


def _claim_corollaries(args, ms) -> list:
    return [oracle.verify_corollaries(n) for n in range(1, args.n_max + 1)]


def _claim_prop6(args, ms) -> list:
    reports = []
    for m in ms:
        report = oracle.VerificationReport(
            claim="prop6", params={"m": m, "n_max": args.n_max}
        )
        report.passed = True
        for n in range(1, args.n_max + 1):
            words = []
            for letters in letter_tuples(n, allow_large=args.unsafe_large_n):
                if left_peak_count(letters) != 1:
                    continue
                if contains_descending_run(inverse_letters(letters), m):
                    continue
                words.append(bijections.block_word(Permutation(letters)))
            target = sorted(
                word
                for word in iter_block_words(n)
                if is_avoiding_block_word(word, m)
            )
            if len(words) != len(set(words)) or sorted(words) != target:
                report.passed = False
                report.counterexample = {
                    "n": n,
                    "encoded": len(set(words)),
                    "expected_words": len(target),
                }
                break
        reports.append(report)
    return reports


def _claim_prop7(args, ms) -> list:
    reports = []
    for m in ms:
        dfa = regex.block_word_dfa(m)
        report = oracle.VerificationReport(
            claim="prop7",
            params={
                "m": m,
                "n_max": args.n_max,
                "expression": regex.format_ast(regex.block_word_regex(m)),
            },
        )
        report.passed = True
        for n in range(1, args.n_max + 1):
            for word in iter_words(n):
                if dfa.accepts(word) != is_avoiding_block_word(word, m):
                    report.passed = False
                    report.counterexample = {"word": word, "dfa": dfa.accepts(word)}
                    break
            if not report.passed:
                break
        reports.append(report)
    return reports


def _claim_prop8(args, ms) -> list:
    report = oracle.VerificationReport(
        claim="prop8",
        params={
            "k_max": args.k_max,
            "expression": regex.format_ast(regex.core_regex()),
        },
    )
    report.passed = True
    dfa = regex.core_dfa()
    for k in range(1, args.k_max + 1):
        by_dfa = dfa.count_words(k)
        by_tilings = sum(1 for _ in tilings.enumerate_tilings(k))
        expected = fib(2, k - 1) * fib(2, k)
        if not by_dfa == by_tilings == expected:
            report.passed = False
            report.counterexample = {
                "k": k,
                "dfa": by_dfa,
                "tilings": by_tilings,
                "fibonacci_product": expected,
            }
            break
    return [report]


def _claim_eq1(args, ms) -> list:
    report = oracle.VerificationReport(claim="eq1", params={"n_max": args.n_max})
    report.passed = True
    dfa = regex.block_word_dfa(3)
    for n in range(1, args.n_max + 1):
        lhs = dfa.count_words(n)
        rhs = sum((n - k) * fib(2, k - 1) * fib(2, k) for k in range(1, n))
        if lhs != rhs:
            report.passed = False
            report.counterexample = {"n": n, "word_count": lhs, "double_sum": rhs}
            break
    return [report, oracle.verify_identity_sums(min(args.n_max * 4, 60))]


def _claim_gf3(args, ms) -> list:
    reports = []
    v = series.t_substitution_inverse(3)
    sub_report = oracle.VerificationReport(
        claim="gf3-substitution", params={"coefficients": "1/4 1/8 5/64"}
    )
    sub_report.passed = v.coeffs[1:] == (Fraction(1, 4), Fraction(1, 8), Fraction(5, 64))
    reports.append(sub_report)
    for m in (2, 3, 4):
        report = oracle.VerificationReport(
            claim="gf3", params={"m": m, "x_order": 7, "t_order": 5}
        )
        lhs, rhs = series.ipk_gf_sides(m, 7, 5)
        mismatch = series.first_mismatch(lhs, rhs)
        report.passed = mismatch is None
        if mismatch is not None:
            n, i, left, right = mismatch
            report.counterexample = {
                "x_power": n,
                "t_power": i,
                "lhs": str(left),
                "rhs": str(right),
            }
        reports.append(report)
    return reports


def _claim_gf5(args, ms) -> list:
    reports = []
    for m in (2, 3, 4):
        report = oracle.VerificationReport(
            claim="gf5", params={"m": m, "x_order": 7, "t_order": 5}
        )
        lhs, rhs = series.ilpk_gf_sides(m, 7, 5)
        mismatch = series.first_mismatch(lhs, rhs)
        report.passed = mismatch is None
        if mismatch is not None:
            n, i, left, right = mismatch
            report.counterexample = {
                "x_power": n,
                "t_power": i,
                "lhs": str(left),
                "rhs": str(right),
            }
        reports.append(report)
    return reports


def _claim_gf_general(args, ms) -> list:
    reports = []
    for m in ms:
        report = oracle.VerificationReport(
            claim="gf-general", params={"m": m, "n_max": args.n_max}
        )
        report.passed = True
        expansion = series.ilpk_one_ogf(m, args.n_max)
        dfa = regex.block_word_dfa(m)
        for n in range(1, args.n_max + 1):
            coefficient = expansion.coeffs[n]
            by_dfa = dfa.count_words(n)
            by_oracle = oracle.count_ilpk1_avoiders(n, m, allow_large=args.unsafe_large_n)
            if not coefficient == by_dfa == by_oracle:
                report.passed = False
                report.counterexample = {
                    "n": n,
                    "coefficient": str(coefficient),
                    "dfa": by_dfa,
                    "oracle": by_oracle,
                }
                break
        reports.append(report)
    return reports


_CLAIM_RUNNERS: dict[str, Callable] = {
    "theorem1": _claim_theorem1,
    "theorem2": _claim_theorem2,
    "theorem4": _claim_theorem4,
    "corollaries": _claim_corollaries,
    "prop6": _claim_prop6,
    "prop7": _claim_prop7,
    "prop8": _claim_prop8,
    "eq1": _claim_eq1,
    "gf3": _claim_gf3,
    "gf5": _claim_gf5,
    "gf-general": _claim_gf_general,
}


# ---------------------------------------------------------------------------
# stats


def _cmd_stats(args) -> int:
    p = Permutation.from_text(args.perm)
    report = statistics(p)
    pairs: list[tuple[str, Any]] = [
        ("permutation", str(p)),
        ("n", p.n),
        ("des", report.des),
        ("descent_positions", " ".join(map(str, report.descent_positions))),
        ("pk", report.pk),
        ("peak_positions", " ".join(map(str, report.peak_positions))),
        ("lpk", report.lpk),
        ("left_peak_positions", " ".join(map(str, report.left_peak_positions))),
        ("rpk", report.rpk),
        ("valleys", report.valleys),
        ("valley_positions", " ".join(map(str, report.valley_positions))),
        ("right_valleys", report.right_valleys),
        ("right_valley_positions", " ".join(map(str, report.right_valley_positions))),
        ("ipk", report.ipk),
        ("ilpk", report.ilpk),
        ("descent_composition", _composition_text(descent_composition(p), args)),
    ]
    _emit_pairs(args, "stats", pairs)
    return EXIT_OK


def _composition_text(composition: Composition, args) -> str:
    if args.format == "csv":
        return "-".join(str(part) for part in composition.parts)
    return str(composition)


def _emit_pairs(args, kind: str, pairs: list[tuple[str, Any]]) -> None:
    if args.format == "json":
        _emit_json(args, {"kind": kind, **{k: v for k, v in pairs}})
    elif args.format == "csv":
        lines = ["field,value"] + [f"{k},{v}" for k, v in pairs]
        _emit(args, "\n".join(lines))
    else:
        lines = []
        stamp = _timestamp(args)
        if stamp is not None:
            lines.append(f"generated-at: {stamp}")
        width = max(len(k) for k, _ in pairs)
        for k, v in pairs:
            lines.append(f"{k.ljust(width)}  {v}")
        _emit(args, "\n".join(lines))


# ---------------------------------------------------------------------------
# biject


def render_tiling(tiling: tilings.Tiling) -> str:
    """ASCII boxes, one text row per tiling row, seams shared."""
    width = tiling.width

    def boundaries(row: tuple[int, ...]) -> set[int]:
        out, total = set(), 0
        for block in row:
            total += block
            out.add(total)
        out.add(0)
        return out

    top_b = boundaries(tiling.top)
    bottom_b = boundaries(tiling.bottom)

    def border(marks: set[int]) -> str:
        chars = ["-"] * (4 * width + 1)
        for mark in marks:
            chars[4 * mark] = "+"
        return "".join(chars)

    def cells(marks: set[int]) -> str:
        chars = [" "] * (4 * width + 1)
        for mark in marks:
            chars[4 * mark] = "|"
        return "".join(chars)

    return "\n".join(
        [
            border(top_b),
            cells(top_b),
            border(top_b | bottom_b),
            cells(bottom_b),
            border(bottom_b),
        ]
    )


def _cmd_biject(args) -> int:
    if args.composition is not None:
        return _biject_composition(args)
    if args.perm is not None:
        return _biject_permutation(args)
    return _biject_word(args)


def _biject_composition(args) -> int:
    composition = Composition.from_text(args.composition)
    p = bijections.zero_ipk_permutation(composition)
    pairs = [
        ("composition", _composition_text(composition, args)),
        ("zero_ipk_permutation", str(p)),
        ("descent_composition", _composition_text(descent_composition(p), args)),
        ("ipk", statistics(p).ipk),
    ]
    _emit_pairs(args, "biject-composition", pairs)
    return EXIT_OK


def _biject_permutation(args) -> int:
    p = Permutation.from_text(args.perm)
    if not bijections.is_n_shaped(p):
        print(
            f"error: lpk != 1: not an N-shaped permutation: {p}",
            file=sys.stderr,
        )
        return EXIT_COUNTEREXAMPLE
    split = bijections.canonical_decomposition(p)
    word = bijections.block_word(p)
    pairs: list[tuple[str, Any]] = [
        ("permutation", str(p)),
        ("alpha", " ".join(map(str, split.alpha))),
        ("beta", " ".join(map(str, split.beta))),
        ("gamma", " ".join(map(str, split.gamma))),
        ("word", word),
    ]
    render: tilings.Tiling | None = None
    if is_avoiding_block_word(word, 3):
        j, k, core = regex.split_block_word(word)
        triple = bijections.permutation_to_tiling_triple(p)
        pairs += _word_chain_pairs(j, k, core, triple.tiling)
        render = triple.tiling
    else:
        pairs.append(
            (
                "notice",
                "word has a forbidden factor (inverse contains a descending "
                "3-run); no tiling triple",
            )
        )
    _emit_pairs(args, "biject-permutation", pairs)
    if args.format == "text" and render is not None:
        _emit_tiling_render(args, render)
    return EXIT_OK


def _word_chain_pairs(j, k, core, tiling) -> list[tuple[str, Any]]:
    return [
        ("split_j", j),
        ("split_k", k),
        ("core", core),
        ("core_segments", "|".join(regex.core_segments(core))),
        ("tiling_top", " ".join(map(str, tiling.top))),
        ("tiling_bottom", " ".join(map(str, tiling.bottom))),
    ]


def _emit_tiling_render(args, tiling: tilings.Tiling) -> None:
    if args.output:
        return
    sys.stdout.write(render_tiling(tiling) + "\n")


def _biject_word(args) -> int:
    word = check_word(args.word)
    sections: list[tuple[str, Any]] = [("word", word)]
    handled = False
    render: tilings.Tiling | None = None
    if regex.block_word_dfa(3).accepts(word):
        handled = True
        j, k, core = regex.split_block_word(word)
        tiling = tilings.word_to_tiling(core)
        p = bijections.word_to_permutation(word)
        sections.append(("decoded_permutation", str(p)))
        sections += _word_chain_pairs(j, k, core, tiling)
        render = tiling
    if regex.core_dfa().accepts(word):
        handled = True
        segments = regex.core_segments(word)
        tiling = tilings.word_to_tiling(word)
        sections.append(("z_segments", "|".join(segments)))
        sections.append(("z_tiling_top", " ".join(map(str, tiling.top))))
        sections.append(("z_tiling_bottom", " ".join(map(str, tiling.bottom))))
        render = tiling
    if not handled and is_block_word(word):
        handled = True
        p = bijections.word_to_permutation(word)
        sections.append(("decoded_permutation", str(p)))
        sections.append(
            (
                "notice",
                "encodes an N-shaped permutation but contains a factor from "
                f"{forbidden_factors(3)}; no tiling",
            )
        )
    if not handled:
        print(
            f"error: {word!r} is not a block word, a full avoiding block word, "
            "or a core word",
            file=sys.stderr,
        )
        return EXIT_COUNTEREXAMPLE
    _emit_pairs(args, "biject-word", sections)
    if args.format == "text" and render is not None:
        _emit_tiling_render(args, render)
    return EXIT_OK


# ---------------------------------------------------------------------------
# table


def _cmd_table(args) -> int:
    try:
        if args.kind in ("counts-thm1", "counts-thm2", "descent-matrix"):
            if args.n_max > SAFE_N_MAX and not args.unsafe_large_n:
                raise UsageError(
                    f"--n-max {args.n_max} exceeds the safe bound {SAFE_N_MAX}; "
                    "pass --unsafe-large-n"
                )
        if args.kind == "descent-matrix" and args.n_max > 8:
            raise UsageError("descent-matrix is quadratic in compositions; n-max <= 8")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.kind == "fib":
        order = args.order if args.order is not None else 2
        rows = [[n, fib(order, n)] for n in range(args.n_max + 1)]
        _emit_table(
            args,
            "fib",
            {"order": order, "n_max": args.n_max},
            ["n", "value"],
            rows,
            note=FIB_INDEXING_NOTE,
        )
    elif args.kind == "counts-thm1":
        ms = _parse_int_list(args.m, (3, 4, 5))
        rows = [
            [m, n, oracle.count_ipk0_avoiders(n, m, allow_large=args.unsafe_large_n), fib(m - 1, n)]
            for m in ms
            for n in range(1, args.n_max + 1)
        ]
        _emit_table(
            args,
            "counts-thm1",
            {"m": list(ms), "n_max": args.n_max},
            ["m", "n", "count", "fibonacci"],
            rows,
        )
    elif args.kind == "counts-thm2":
        rows = [
            [
                n,
                oracle.count_ilpk1_avoiders(n, 3, allow_large=args.unsafe_large_n),
                fib(2, n - 1) * fib(2, n) - (n + 1) // 2,
            ]
            for n in range(1, args.n_max + 1)
        ]
        _emit_table(
            args,
            "counts-thm2",
            {"n_max": args.n_max},
            ["n", "count", "closed_form"],
            rows,
        )
    elif args.kind == "gf-coeffs":
        ms = _parse_int_list(args.m, (3,))
        m = ms[0]
        truncation = args.order if args.order is not None else args.n_max
        expansion = series.ilpk_one_ogf(m, truncation)
        rows = [[n, str(expansion.coeffs[n])] for n in range(expansion.order + 1)]
        _emit_table(
            args,
            "gf-coeffs",
            {"m": m, "order": expansion.order},
            ["n", "coefficient"],
            rows,
        )
    else:  # descent-matrix
        n = args.n_max
        matrix = oracle.descent_pair_matrix(n)
        rows = []
        for (left, right), count in sorted(matrix.items()):
            rows.append(["-".join(map(str, left)), "-".join(map(str, right)), count])
        _emit_table(
            args,
            "descent-matrix",
            {"n": n},
            ["L", "M", "count"],
            rows,
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# series


def _cmd_series(args) -> int:
    if args.kind == "substitution-inverse":
        expansion = series.t_substitution_inverse(args.order)
        label = "v with 4v/(1+v)^2 = t"
        var = "t"
    elif args.kind == "fib-ogf":
        expansion = series.fibonacci_ogf(args.m, args.order)
        label = "(1-x)/(1-2x+x^m)"
        var = "x"
    else:
        expansion = series.ilpk_one_ogf(args.m, args.order)
        label = "x^2(x^(m-2)-1)/((1-x)^2(x^(m+1)-3x^m+3x-1))"
        var = "x"

    if args.format == "csv":
        lines = ["n,coefficient"] + [
            f"{i},{c}" for i, c in enumerate(expansion.coeffs)
        ]
        _emit(args, "\n".join(lines))
    elif args.format == "json":
        _emit_json(
            args,
            {
                "kind": args.kind,
                "m": args.m,
                "order": expansion.order,
                "label": label,
                "coefficients": [str(c) for c in expansion.coeffs],
            },
        )
    else:
        lines = []
        stamp = _timestamp(args)
        if stamp is not None:
            lines.append(f"generated-at: {stamp}")
        lines.append(f"{label}:")
        lines.append(series.format_series(expansion, var=var))
        _emit(args, "\n".join(lines))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

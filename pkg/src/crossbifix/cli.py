"""Command-line front door.

Verbs: construct, count, enumerate, verify, nonexpandable, witness,
maxset, compare.  Word files are newline-separated 0/1 strings with
blank lines ignored; '-' names stdin or stdout.  Exit codes: 0 success,
1 a verification failed (violations found, set expandable, or no
blocker), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combinatorics import DEFAULT_ENUMERATION_CAP, bifix_free_count, enumerate_bifix_free
from .construction import cbfs, cbfs_cardinality
from .errors import CrossBifixError, NoBlockerError
from .report import compare_table, read_word_set, render
from .sets import WordSet
from .verification import check_set, expansion_blocker, is_non_expandable, max_set_search


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as handle:
            handle.write(text)


def _load_set(args: argparse.Namespace) -> WordSet:
    if getattr(args, "input", None):
        if args.input == "-":
            return read_word_set(sys.stdin)
        return read_word_set(args.input)
    if getattr(args, "n", None):
        return cbfs(args.n)
    raise ValueError("pass --input FILE or --n N to select a set")


def _cmd_construct(args: argparse.Namespace) -> int:
    _emit(render(cbfs(args.n), args.format), args.output)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    if args.bf:
        value = bifix_free_count(args.q, args.n)
    else:
        if args.q != 2:
            raise ValueError("--q only applies to --bf counts")
        value = cbfs_cardinality(args.n)
    _emit(f"{value}\n", args.output)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    _emit(render(enumerate_bifix_free(args.n, cap=args.cap), args.format), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    word_set = _load_set(args)
    report = check_set(word_set, method=args.method)
    if args.format == "json":
        _emit(json.dumps(report.to_json_dict()) + "\n", args.output)
    elif report.set_ok:
        _emit("ok\n", args.output)
    else:
        lines = [f"violations: {len(report.violations)}"]
        lines += [f"{v.word_a} {v.word_b} {v.factor.bits}" for v in report.violations]
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if report.set_ok else 1


def _cmd_nonexpandable(args: argparse.Namespace) -> int:
    word_set = _load_set(args)
    verdict, gamma = is_non_expandable(word_set, word_set.n, cap=args.cap)
    if args.format == "json":
        payload = {
            "non_expandable": verdict,
            "n": word_set.n,
            "cardinality": len(word_set),
            "expanding_word": None if gamma is None else str(gamma),
        }
        _emit(json.dumps(payload) + "\n", args.output)
    elif verdict:
        _emit("non-expandable\n", args.output)
    else:
        _emit(f"expandable: {gamma}\n", args.output)
    return 0 if verdict else 1


def _cmd_witness(args: argparse.Namespace) -> int:
    word_set = _load_set(args)
    try:
        witness = expansion_blocker(args.gamma, word_set)
    except NoBlockerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        _emit(json.dumps(witness.to_json_dict()) + "\n", args.output)
    else:
        _emit(f"{witness.word_a} {witness.word_b} {witness.factor.bits}\n", args.output)
    return 0


def _cmd_maxset(args: argparse.Namespace) -> int:
    word_set, optimal = max_set_search(args.n, time_limit=args.time_limit, cap=args.cap)
    if args.format == "json":
        payload = word_set.to_json_dict()
        payload["optimal"] = optimal
        _emit(json.dumps(payload) + "\n", args.output)
    else:
        _emit(render(word_set, args.format), args.output)
        summary = "proven optimal" if optimal else "best found before the deadline"
        print(f"cardinality {len(word_set)}, {summary}", file=sys.stderr)
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    _emit(render(compare_table(args.n_min, args.n_max), args.format), args.output)
    return 0


def _add_format(parser: argparse.ArgumentParser, choices: tuple[str, ...]) -> None:
    parser.add_argument("--format", choices=choices, default="text", help="output format")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", default=None, metavar="FILE", help="write here instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossbifix",
        description="Construct, count, and certify cross-bifix-free sets of binary words.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", help="build the cross-bifix-free set for a length")
    p.add_argument("--n", type=int, required=True, help="word length (n >= 3)")
    _add_format(p, ("text", "json", "csv"))
    _add_output(p)
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("count", help="closed-form cardinalities")
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument("--bf", action="store_true", help="count all bifix-free words instead")
    p.add_argument("--q", type=int, default=2, help="alphabet size for --bf (default 2)")
    _add_output(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("enumerate", help="list every bifix-free word of a length")
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="enumeration cap on n")
    _add_format(p, ("text", "json", "csv"))
    _add_output(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("verify", help="check a word set for shared prefix/suffix factors")
    p.add_argument("--input", default="-", metavar="FILE", help="word file, '-' for stdin")
    p.add_argument("--method", choices=("naive", "trie"), default="trie")
    _add_format(p, ("text", "json"))
    _add_output(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("nonexpandable", help="certify that no bifix-free word can join a set")
    p.add_argument("--input", default=None, metavar="FILE", help="word file, '-' for stdin")
    p.add_argument("--n", type=int, default=None, help="use the built set of this length")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="enumeration cap on n")
    _add_format(p, ("text", "json"))
    _add_output(p)
    p.set_defaults(handler=_cmd_nonexpandable)

    p = sub.add_parser("witness", help="show which member blocks a candidate word")
    p.add_argument("--gamma", required=True, metavar="WORD", help="the candidate word")
    p.add_argument("--input", default=None, metavar="FILE", help="word file, '-' for stdin")
    p.add_argument("--n", type=int, default=None, help="use the built set of this length")
    _add_format(p, ("text", "json"))
    _add_output(p)
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("maxset", help="search a maximum cross-bifix-free set")
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="enumeration cap on n")
    _add_format(p, ("text", "json", "csv"))
    _add_output(p)
    p.set_defaults(handler=_cmd_maxset)

    p = sub.add_parser("compare", help="counts per length next to the Fibonacci baseline")
    p.add_argument("--from", dest="n_min", type=int, required=True, help="first length")
    p.add_argument("--to", dest="n_max", type=int, required=True, help="last length")
    _add_format(p, ("text", "json", "csv"))
    _add_output(p)
    p.set_defaults(handler=_cmd_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (CrossBifixError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

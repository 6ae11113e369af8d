"""Command-line front end: ``search``, ``bench`` and ``gen``.

Exit status is 0 on success, 1 on a usage error and 2 on an I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bench
from .corpus import CorpusError, CorpusSpec, generate_random, load_text
from .engine import AlgorithmId, SearchRequest, search

EXIT_OK, EXIT_USAGE, EXIT_IO = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _positive_int(value: str) -> int:
    try:
        n = int(value, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value!r}")
    return n


def _seed(value: str) -> int:
    try:
        n = int(value, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if not 0 <= n < 1 << 64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits: {value!r}")
    return n


def _int_list(value: str) -> tuple[int, ...]:
    items = [v for v in value.split(",") if v.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of integers")
    return tuple(_positive_int(v.strip()) for v in items)


def _algo_list(value: str) -> tuple[str, ...]:
    names = tuple(v.strip().lower() for v in value.split(",") if v.strip())
    if not names:
        raise argparse.ArgumentTypeError("expected a comma-separated list of algorithms")
    for name in names:
        if name not in bench.COMPETITORS:
            try:
                AlgorithmId.parse(name)
            except ValueError as exc:
                raise argparse.ArgumentTypeError(str(exc)) from None
    return names


def _random_corpus(value: str) -> tuple[int, int]:
    try:
        n, sigma = (int(v, 0) for v in value.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <n>:<sigma>, got {value!r}") from None
    if n < 1 or not 2 <= sigma <= 256:
        raise argparse.ArgumentTypeError("need n >= 1 and 2 <= sigma <= 256")
    return n, sigma


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="heapmatch", description="Abelian (jumbled) pattern matching.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("search", help="report abelian occurrences of a pattern in a file")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--pattern", help="pattern, taken as the raw bytes of the argument")
    src.add_argument("--pattern-file", help="read the pattern bytes from a file")
    p.add_argument("--text-file", required=True)
    p.add_argument("--algo", default="auto", choices=[a.value for a in AlgorithmId])
    p.add_argument("--json", action="store_true", help="print positions and counters as JSON")
    p.add_argument("--one-based", action="store_true")
    p.add_argument("--no-reduce", action="store_true", help="skip alphabet reduction of the text")

    p = sub.add_parser("bench", help="time algorithms over pattern lengths")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--text-file")
    src.add_argument("--random", type=_random_corpus, metavar="N:SIGMA")
    p.add_argument("--lengths", type=_int_list, default=bench.DEFAULT_LENGTHS)
    p.add_argument("--runs", type=_positive_int, default=bench.DEFAULT_RUNS)
    p.add_argument("--algos", type=_algo_list, default=bench.DEFAULT_ALGORITHMS)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--format", default="text", choices=["text", "csv", "jsonl"])
    p.add_argument("--no-counters", action="store_true", help="skip the untimed instrumented runs")

    p = sub.add_parser("gen", help="write a seeded uniform random corpus")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out", required=True)
    return parser


def _cmd_search(args, out) -> int:
    if args.pattern is not None:
        pattern = os.fsencode(args.pattern)
    else:
        pattern = load_text(args.pattern_file)
    text = load_text(args.text_file)
    if not pattern:
        raise UsageError("heapmatch search: error: pattern is empty")
    report = search(SearchRequest(pattern, text, args.algo, instrument=args.json,
                                  reduce_alphabet=not args.no_reduce))
    shift = 1 if args.one_based else 0
    positions = [p + shift for p in report.positions]
    if args.json:
        json.dump({
            "algorithm": args.algo,
            "positions": positions,
            "inspections": report.inspections,
            "candidates": report.candidates,
            "verifications": report.verifications,
            "verified_rejections": report.verified_rejections,
        }, out)
        out.write("\n")
    else:
        out.writelines(f"{p}\n" for p in positions)
    return EXIT_OK


def _cmd_bench(args, out) -> int:
    if args.text_file is not None:
        corpus = CorpusSpec(kind="file", path=args.text_file, seed=args.seed)
    else:
        n, sigma = args.random
        corpus = CorpusSpec(kind="random", n=n, sigma=sigma, seed=args.seed)
    config = bench.BenchConfig(corpus=corpus, lengths=args.lengths, runs=args.runs,
                               algorithms=args.algos, seed=args.seed,
                               counters=not args.no_counters)
    table = bench.run_benchmark(config)
    out.write(bench.render_table(table, args.format))
    return EXIT_OK


def _cmd_gen(args, out) -> int:
    if not 2 <= args.sigma <= 256:
        raise UsageError("heapmatch gen: error: --sigma must lie in [2, 256]")
    data = generate_random(args.n, args.sigma, args.seed)
    try:
        with open(args.out, "wb") as f:
            f.write(data)
    except OSError as exc:
        raise CorpusError(f"cannot write {args.out!r}: {exc.strerror or exc}") from exc
    return EXIT_OK


COMMANDS = {"search": _cmd_search, "bench": _cmd_bench, "gen": _cmd_gen}


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except SystemExit as exc:  # --help
        return exc.code or EXIT_OK
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (CorpusError, OSError) as exc:
        err.write(f"heapmatch: {exc}\n")
        return EXIT_IO


def main() -> None:
    sys.exit(run_cli())

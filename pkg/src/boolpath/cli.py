"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse, 3 unsupported class, 4 capacity,
5 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import __version__
from .bitmat import BitMatrix, bool_product
from .errors import CapacityError, GraphClassError, GraphParseError
from .generators import gen_block_graph, gen_dag, gen_tree
from .graph import BLOCK_CLASSES, GraphClass, classify, format_graph, parse_graph
from .lpp_core import longest_path_length
from .oracle import oracle_longest
from .paths import (
    DEFAULT_PATH_CAP,
    all_longest_paths,
    count_longest_paths,
    generate_all_longest_chains,
    heaviest_chains,
)

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_CLASS, EXIT_CAPACITY, EXIT_MISMATCH = range(6)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _seed(text):
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=_positive, default=DEFAULT_PATH_CAP,
                        help="refuse to enumerate more than this many paths")

    parser = _Parser(prog="boolpath", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_text in (
        ("classify", "print the graph class"),
        ("length", "longest-path length"),
        ("paths", "every longest path, one per line"),
        ("count", "number of longest paths"),
        ("chains", "longest and heaviest block chains of a block graph"),
        ("oracle-check", "compare against brute-force enumeration"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", help="graph file, or - for stdin")
        if name == "length":
            p.add_argument("--epsilon", type=_positive, default=1,
                           help="stop the search once the bracket is this narrow")

    gen = sub.add_parser("gen", help="write a random graph file")
    gen.add_argument("kind", choices=("tree", "block", "dag"))
    gen.add_argument("--seed", type=_seed, default=0)
    gen.add_argument("--n", type=_positive, default=8)
    gen.add_argument("--orders", default="3,3", help="comma-separated block orders")
    gen.add_argument("--p", default="1/2", help="DAG edge probability")
    gen.add_argument("-o", "--output", default="-")

    bench = sub.add_parser("bench", help="time bool_product on random dense matrices")
    bench.add_argument("--sizes", type=_positive, nargs="+", default=[256, 512, 1024])
    bench.add_argument("--seed", type=_seed, default=0)
    bench.add_argument("--repeat", type=_positive, default=3)
    return parser


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _emit(out, fmt: str, record: dict, text: str) -> None:
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
    else:
        out.write(text + "\n")


def _length_record(g, epsilon):
    res = longest_path_length(g, epsilon)
    record = {"class": str(res.graph_class)}
    parts = [f"class={res.graph_class}"]
    if res.interval is not None:
        record["interval"] = list(res.interval)
        parts.append(f"lo={res.interval[0]} hi={res.interval[1]}")
    else:
        record["length"] = res.length
        parts.append(f"length={res.length}")
    if res.chain_length is not None:
        record["chain_length"] = res.chain_length
        parts.append(f"chain={res.chain_length}")
    return record, " ".join(parts)


def _run_graph_command(args, out) -> int:
    g = parse_graph(_read_input(args.input))
    cls = classify(g)
    if args.command == "classify":
        _emit(out, args.format, {"class": str(cls)}, f"class={cls}")
        return EXIT_OK
    if cls is GraphClass.OTHER:
        raise GraphClassError("graph is not a tree, DAG, block graph or complete graph")

    if args.command == "length":
        record, text = _length_record(g, args.epsilon)
        _emit(out, args.format, record, text)
    elif args.command == "paths":
        ps = all_longest_paths(g, args.cap)
        record = {"class": str(cls), "length": ps.length, "paths": [list(p) for p in ps]}
        _emit(out, args.format, record, "\n".join(" ".join(map(str, p)) for p in ps))
    elif args.command == "count":
        count = count_longest_paths(g, args.cap)
        length = longest_path_length(g).length
        _emit(out, args.format, {"class": str(cls), "length": length, "count": count},
              f"class={cls} length={length} count={count}")
    elif args.command == "chains":
        if cls not in BLOCK_CLASSES or cls is GraphClass.COMPLETE_GRAPH:
            raise GraphClassError("chains need a block graph with at least two blocks")
        longest = generate_all_longest_chains(g)
        heaviest = heaviest_chains(g)
        record = {
            "class": str(cls),
            "chain_length": len(longest[0].blocks),
            "longest_chains": [[list(b) for b in c.blocks] for c in longest],
            "heaviest_chains": [[list(b) for b in c.blocks] for c in heaviest],
        }
        lines = [f"longest {c}" for c in longest] + [f"heaviest {c}" for c in heaviest]
        _emit(out, args.format, record, "\n".join(lines))
    elif args.command == "oracle-check":
        return _oracle_check(g, cls, args, out)
    return EXIT_OK


def _oracle_check(g, cls, args, out) -> int:
    res = longest_path_length(g)
    ps = all_longest_paths(g, args.cap)
    report = oracle_longest(g)
    problems = []
    if res.length != report.length:
        problems.append(f"length {res.length} != oracle {report.length}")
    if ps.paths != report.paths.paths:
        problems.append(f"path set differs ({ps.count} vs oracle {report.paths.count})")
    record = {"class": str(cls), "length": res.length, "count": ps.count, "ok": not problems}
    text = f"{'ok' if not problems else 'MISMATCH'} class={cls} length={res.length} count={ps.count}"
    if problems:
        record["problems"] = problems
        text += "\n" + "\n".join(problems)
    _emit(out, args.format, record, text)
    return EXIT_OK if not problems else EXIT_MISMATCH


def _run_gen(args, out) -> int:
    if args.kind == "tree":
        g = gen_tree(args.n, args.seed)
    elif args.kind == "dag":
        try:
            p = Fraction(args.p)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad probability {args.p!r}") from None
        if not 0 < p <= 1:
            raise UsageError("probability must lie in (0, 1]")
        g = gen_dag(args.n, p, args.seed)
    else:
        try:
            orders = [int(x) for x in args.orders.split(",")]
        except ValueError:
            raise UsageError(f"bad block orders {args.orders!r}") from None
        if not orders or min(orders) < 3:
            raise UsageError("block orders must be integers >= 3")
        g = gen_block_graph(orders, args.seed)
    text = format_graph(g)
    if args.output == "-":
        out.write(text)
    else:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


def bench_rows(sizes, seed=0, repeat=3):
    """(n, best-of-repeat seconds) for one dense bool_product per size."""
    rng = random.Random(seed)
    rows = []
    for n in sizes:
        x = BitMatrix(n, [rng.getrandbits(n) for _ in range(n)])
        y = BitMatrix(n, [rng.getrandbits(n) for _ in range(n)])
        best = float("inf")
        for _ in range(repeat):
            start = time.perf_counter()
            bool_product(x, y)
            best = min(best, time.perf_counter() - start)
        rows.append((n, best))
    return rows


def _run_bench(args, out) -> int:
    for n, seconds in bench_rows(args.sizes, args.seed, args.repeat):
        out.write(f"{n} {seconds:.6f}\n")
    return EXIT_OK


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.command == "gen":
            return _run_gen(args, out)
        if args.command == "bench":
            return _run_bench(args, out)
        return _run_graph_command(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (GraphParseError, OSError) as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except GraphClassError as exc:
        err.write(f"unsupported class: {exc}\n")
        return EXIT_CLASS
    except CapacityError as exc:
        err.write(f"capacity: {exc}\n")
        return EXIT_CAPACITY


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

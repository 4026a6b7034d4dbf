"""alphatree command line.

Subcommands: tree (minimax cost of a weights file), code (build a
codebook from a sample), stats (score a codebook against a target
file), bench (timed sweeps comparing the two real-weight strategies).

Exit codes: 0 on success, 2 for any input problem, 3 when an internal
cross-check fails (which means a bug, not bad input).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .coding import (
    CodeBook,
    CodingError,
    Distribution,
    build_code,
    empirical_distribution,
    evaluate,
)
from .core import ParseError, alpha_int_fast, depths_to_tree, parse_weights
from .leveltree import LevelTree, LevelTreeError
from .realweight import WeightSeq, alpha_real, alpha_real_new, alpha_real_sorted


class CliError(Exception):
    """Input-level problem: reported on stderr, exit code 2."""


class InternalCheckError(Exception):
    """A cross-check between independent code paths failed: exit 3."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_text(path, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


# ----------------------------------------------------------------------
# tree


def cmd_tree(args) -> int:
    ws = parse_weights(_read_text(args.weights))
    if not ws:
        raise CliError("no weights found in %s" % args.weights)
    if args.int_weights:
        bad = [w for w in ws if w != int(w)]
        if bad:
            raise CliError("--int given but %r is not an integer" % (bad[0],))
        ints = [int(w) for w in ws]
        cost, depths = alpha_int_fast(ints)
        alpha: float | int = cost
        offset = 0
        d = len(set(ints))
        strategy = "int"
        instrumentation = {
            "sets": 0,
            "undos": 0,
            "finds": 0,
            "unions": 0,
            "deunions": 0,
            "partition_items": 0,
        }
        adjusted = ints
    else:
        seq = WeightSeq(ws)
        if args.algo == "new":
            res = alpha_real_new(seq)
        elif args.algo == "sorted":
            res = alpha_real_sorted(seq)
        else:
            res = alpha_real(seq)
        alpha = res.alpha
        offset = res.b
        depths = res.depths
        d = seq.d
        strategy = res.strategy
        instrumentation = res.instrumentation
        adjusted = seq.adjusted(res.b)
    tree = depths_to_tree(depths)
    out = {
        "n": len(ws),
        "d": d,
        "alpha": alpha,
        "offset_b": offset,
        "depths": depths,
        "parent_array": tree.parent_array(),
        "strategy": strategy,
        "instrumentation": instrumentation,
    }
    if args.dump_level_tree:
        out["level_tree"] = json.loads(LevelTree(adjusted).serialize())
    if args.pretty:
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        print(json.dumps(out, sort_keys=True))
    return 0


# ----------------------------------------------------------------------
# code


def _counts_from_csv(text: str) -> dict:
    counts: dict = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        label, sep, count = line.rpartition(",")
        if not sep:
            raise CliError("line %d: expected label,count" % lineno)
        try:
            c = int(count.strip())
        except ValueError:
            raise CliError("line %d: bad count %r" % (lineno, count.strip())) from None
        if label in counts:
            raise CliError("line %d: duplicate label %r" % (lineno, label))
        counts[label] = c
    if not counts:
        raise CliError("no counts found")
    return counts


def _counts_from_bytes(data: bytes) -> dict:
    if not data:
        raise CliError("sample file is empty")
    counts: dict = {}
    for byte in data:
        sym = chr(byte)
        counts[sym] = counts.get(sym, 0) + 1
    return counts


def cmd_code(args) -> int:
    if args.csv:
        counts = _counts_from_csv(_read_text(args.sample))
    else:
        counts = _counts_from_bytes(_read_bytes(args.sample))
    alphabet = list(args.alphabet) if args.alphabet is not None else None
    dist = empirical_distribution(counts, smoothing=args.smoothing, alphabet=alphabet)
    book = build_code(dist)
    _write_text(args.out, book.to_json(q=dist))
    return 0


# ----------------------------------------------------------------------
# stats


def cmd_stats(args) -> int:
    book, q = CodeBook.from_json(_read_text(args.code))
    if q is None:
        raise CliError(
            'codebook has no "q" entry; stats needs the sample distribution '
            "(regenerate the codebook with the code subcommand)"
        )
    data = _read_bytes(args.target)
    if not data:
        raise CliError("target file is empty")
    counts = dict.fromkeys(book.labels, 0)
    for byte in data:
        sym = chr(byte)
        if sym not in counts:
            raise CliError("target symbol %r is not in the code" % sym)
        counts[sym] += 1
    total = len(data)
    p = Distribution(book.labels, [counts[lab] / total for lab in book.labels])
    report = evaluate(p, book, q)
    print(report.to_json())
    return 0


# ----------------------------------------------------------------------
# bench


def generate_weights(rng: random.Random, n: int, d: int) -> list[float]:
    """Random instance with exactly d distinct ceilings among n weights;
    every fractional part is nonzero."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n, got d=%d n=%d" % (d, n))
    pool = rng.sample(range(0, 2 * d + 8), d)
    ceils = pool + [pool[rng.randrange(d)] for _ in range(n - d)]
    rng.shuffle(ceils)
    out = []
    for c in ceils:
        f = rng.random()
        while f == 0.0:
            f = rng.random()
        out.append(c - 1 + f)
    return out


def _trial_seed(seed: int, n: int, d: int, trial: int) -> int:
    digest = hashlib.sha256(("%d:%d:%d:%d" % (seed, n, d, trial)).encode()).digest()
    return int.from_bytes(digest[:8], "big")


_ALGO_RUNNERS = {"new": alpha_real_new, "sorted": alpha_real_sorted}


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        vals = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise CliError("bad %s list %r" % (what, text)) from None
    if not vals or any(v < 1 for v in vals):
        raise CliError("%s list must hold positive integers" % what)
    return vals


def _bench_job(seed: int, n: int, d: int, trial: int, algos: list[str]) -> list[dict]:
    rng = random.Random(_trial_seed(seed, n, d, trial))
    seq = WeightSeq(generate_weights(rng, n, d))
    rows = []
    results = []
    for algo in algos:
        t0 = time.perf_counter_ns()
        res = _ALGO_RUNNERS[algo](seq)
        wall = time.perf_counter_ns() - t0
        results.append(res)
        row = {"n": n, "d": d, "trial": trial, "algo": algo, "wall_ns": wall}
        for key in ("sets", "undos", "finds", "unions"):
            row[key] = res.instrumentation[key]
        rows.append(row)
    first = results[0]
    for res in results[1:]:
        if abs(res.alpha - first.alpha) > 1e-9 or res.b != first.b:
            raise InternalCheckError(
                "strategies disagree (seed=%d n=%d d=%d trial=%d): "
                "%s gave alpha=%r b=%r, %s gave alpha=%r b=%r"
                % (
                    seed, n, d, trial,
                    algos[0], first.alpha, first.b,
                    res.strategy, res.alpha, res.b,
                )
            )
    return rows


def cmd_bench(args) -> int:
    ns = _parse_int_list(args.n, "size")
    ds = _parse_int_list(args.d, "distinct-ceiling")
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in _ALGO_RUNNERS:
            raise CliError("unknown algorithm %r (pick from new, sorted)" % a)
    if not algos:
        raise CliError("no algorithms selected")
    if args.trials < 1:
        raise CliError("--trials must be at least 1")
    jobs = [
        (n, d, t)
        for n in ns
        for d in ds
        if d <= n
        for t in range(args.trials)
    ]
    if not jobs:
        raise CliError("no feasible (n, d) combinations")
    if args.workers > 1:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            batches = list(
                pool.map(lambda j: _bench_job(args.seed, *j, algos), jobs)
            )
    else:
        batches = [_bench_job(args.seed, n, d, t, algos) for n, d, t in jobs]
    cols = ["n", "d", "trial", "algo"]
    if not args.omit_timing:
        cols.append("wall_ns")
    cols += ["sets", "undos", "finds", "unions"]
    lines = [",".join(cols)]
    for batch in batches:
        for row in batch:
            lines.append(",".join(str(row[c]) for c in cols))
    _write_text(args.out, "\n".join(lines))
    return 0


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphatree",
        description="Alphabetic minimax trees and order-preserving prefix codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tree", help="minimax cost and witness for a weights file")
    t.add_argument("weights", help="weights file (numbers split by lines/commas), or - for stdin")
    t.add_argument("--int", dest="int_weights", action="store_true",
                   help="require integer weights and use the integer fast path")
    t.add_argument("--algo", choices=("auto", "new", "sorted"), default="auto",
                   help="real-weight strategy (default auto)")
    t.add_argument("--dump-level-tree", action="store_true",
                   help="embed the level-tree snapshot in the output")
    t.add_argument("--pretty", action="store_true", help="indent the JSON output")
    t.set_defaults(func=cmd_tree)

    c = sub.add_parser("code", help="build a codebook from a sample")
    c.add_argument("sample", help="sample file: raw bytes, or label,count lines with --csv")
    c.add_argument("--csv", action="store_true", help="sample is label,count lines")
    c.add_argument("--smoothing", choices=("none", "add_one"), default="none")
    c.add_argument("--alphabet", default=None,
                   help="declared alphabet as one string of symbols")
    c.add_argument("--out", default=None, help="write the codebook here instead of stdout")
    c.set_defaults(func=cmd_code)

    s = sub.add_parser("stats", help="score a codebook against a target file")
    s.add_argument("target", help="target file (raw bytes)")
    s.add_argument("--code", required=True, help="codebook JSON from the code subcommand")
    s.set_defaults(func=cmd_stats)

    b = sub.add_parser("bench", help="compare the real-weight strategies")
    b.add_argument("--n", required=True, help="comma-separated instance sizes")
    b.add_argument("--d", default="2", help="comma-separated distinct-ceiling counts")
    b.add_argument("--trials", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--algos", default="new,sorted")
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--omit-timing", action="store_true",
                   help="drop the wall_ns column for reproducible output")
    b.add_argument("--out", default=None, help="write the CSV here instead of stdout")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalCheckError as e:
        print("internal check failed: %s" % e, file=sys.stderr)
        return 3
    except AssertionError as e:
        print("internal invariant violated: %s" % e, file=sys.stderr)
        return 3
    except (CliError, ParseError, CodingError, LevelTreeError, ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

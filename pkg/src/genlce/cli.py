"""Command-line harness: answer query batches, list runs, verify, benchmark."""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from collections import Counter
from pathlib import Path
from typing import Optional, Sequence

from . import _backend
from .errors import UsageError
from .lce import COVERS, ENGINES, LceIndex, QueryError, build_index
from .oracle import naive_lce, naive_runs
from .runs import compute_runs_detailed
from .text import MODES, ORDERED, UNORDERED, ComparisonStats, Text

FAMILIES = ("random", "periodic", "fibonacci", "thue-morse")
ALL_PAIRS_LIMIT = 512
VERIFY_SAMPLES = 20000
RUNS_VERIFY_LIMIT = 256


class CliError(Exception):
    pass


# ---------------------------------------------------------------- inputs

def read_queries(path: str) -> list[tuple[int, int]]:
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise CliError(f"cannot read queries file {path}: {exc.strerror}") from None
    out = []
    for lineno, line in enumerate(lines, 1):
        fields = line.split()
        if not fields:
            continue
        if len(fields) != 2:
            raise CliError(f"{path}:{lineno}: expected 'i j', got {line.strip()!r}")
        try:
            out.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise CliError(f"{path}:{lineno}: positions must be integers") from None
    return out


def load_text(path: str, ints: bool, mode: str = ORDERED) -> Text:
    try:
        return Text.from_file(path, ints=ints, mode=mode)
    except OSError as exc:
        raise CliError(f"cannot read text file {path}: {exc.strerror}") from None
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from None


def generate(family: str, n: int, seed: int, sigma: int = 4) -> list[int]:
    if n < 1:
        raise CliError("--n must be positive")
    if sigma < 1:
        raise CliError("--sigma must be positive")
    rng = random.Random(seed)
    if family == "random":
        return [rng.randrange(sigma) for _ in range(n)]
    if family == "periodic":
        period = rng.randint(1, max(1, min(64, n // 4)))
        base = [rng.randrange(sigma) for _ in range(period)]
        return [base[x % period] for x in range(n)]
    if family == "fibonacci":
        a, b = [0], [0, 1]
        while len(b) < n:
            a, b = b, b + a
        return b[:n]
    if family == "thue-morse":
        return [bin(x).count("1") & 1 for x in range(n)]
    raise CliError(f"unknown family {family!r}")


def random_queries(n: int, q: int, seed: int) -> list[tuple[int, int]]:
    rng = random.Random(seed + 1)
    return [(rng.randint(1, n), rng.randint(1, n)) for _ in range(q)]


# ---------------------------------------------------------------- reports

def digest(values: Sequence[int]) -> dict:
    h = hashlib.sha256()
    for v in values:
        h.update(f"{v}\n".encode())
    return {"count": len(values), "sha256": h.hexdigest()}


def _calls_by_level(index: LceIndex) -> dict[str, dict[str, int]]:
    return {kind: {str(k): c for k, c in enumerate(calls)}
            for kind, calls in index.engine.calls_by_level().items()}


def _snapshot(indexes: Sequence[LceIndex]) -> dict:
    stats = ComparisonStats()
    finds = unions = 0
    calls: dict[str, Counter] = {}
    for index in indexes:
        stats = stats + index.text.stats()
        dsu = index.dsu_totals()
        finds += dsu["finds"]
        unions += dsu["unions"]
        for kind, levels in _calls_by_level(index).items():
            calls.setdefault(kind, Counter()).update(levels)
    return {"stats": stats, "finds": finds, "unions": unions, "calls": calls}


def _phase(after: dict, before: Optional[dict] = None) -> dict:
    if before is None:
        before = {"stats": ComparisonStats(), "finds": 0, "unions": 0, "calls": {}}
    stats = after["stats"] - before["stats"]
    calls = {}
    for kind, levels in after["calls"].items():
        prev = before["calls"].get(kind, Counter())
        calls[kind] = {k: levels[k] - prev.get(k, 0) for k in sorted(levels, key=int)}
    return {
        "order_comparisons": stats.order_comparisons,
        "equality_tests": stats.equality_tests,
        "symbol_comparisons": stats.symbol_comparisons,
        "memo_hits": stats.memo_hits,
        "dsu_finds": after["finds"] - before["finds"],
        "dsu_unions": after["unions"] - before["unions"],
        "short_lce_calls_by_level": calls,
    }


def _add_phases(a: dict, b: dict) -> dict:
    out = {}
    for key, value in a.items():
        if isinstance(value, dict):
            out[key] = _add_phases(value, b.get(key, {}))
        else:
            out[key] = value + b.get(key, 0)
    for key, value in b.items():
        out.setdefault(key, value)
    return out


def build_report(text: Text, indexes: Sequence[LceIndex], pre: dict, post: dict,
                 answers: Sequence[int], timings: dict, extra: Optional[dict] = None) -> dict:
    preprocessing = _phase(pre)
    query = _phase(post, pre)
    config = dict(indexes[0].config())
    config["backend"] = _backend.BACKEND
    report = {
        "input": {"n": text.n, "alphabet_size": text.alphabet_size, "mode": text.mode},
        "config": config,
        "phases": {"preprocessing": preprocessing, "query": query},
        "totals": _add_phases(preprocessing, query),
        "answers": digest(answers),
        "timings": {key: round(value, 6) for key, value in timings.items()},
    }
    if extra:
        report.update(extra)
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _write_report(path: Optional[str], report: dict) -> None:
    if path is None:
        return
    try:
        Path(path).write_text(dump_report(report))
    except OSError as exc:
        raise CliError(f"cannot write report {path}: {exc.strerror}") from None


# ---------------------------------------------------------------- commands

def _run_batch(text: Text, queries, engine: str, t: Optional[int], cover: str):
    started = time.perf_counter()
    index = build_index(text, engine=engine, t=t, cover=cover)
    pre = _snapshot([index])
    built = time.perf_counter()
    result = index.batch(queries)
    post = _snapshot([index])
    done = time.perf_counter()
    timings = {"preprocessing_s": built - started, "query_s": done - built}
    return index, result.answers, build_report(text, [index], pre, post, result.answers, timings)


def cmd_query(args, out) -> int:
    text = load_text(args.text, args.ints, args.mode)
    queries = read_queries(args.queries)
    _, answers, report = _run_batch(text, queries, args.engine, args.t, args.cover)
    out.write("".join(f"{a}\n" for a in answers))
    _write_report(args.report, report)
    return 0


def cmd_runs(args, out) -> int:
    text = load_text(args.text, args.ints)
    started = time.perf_counter()
    result = compute_runs_detailed(text, engine=args.engine, t=args.t)
    elapsed = time.perf_counter() - started
    for run in result.runs:
        out.write(f"{run.start} {run.end} {run.period}\n")
    if args.report:
        pre, query = result.preprocessing, result.comparisons
        phases = {name: {"order_comparisons": s.order_comparisons,
                         "equality_tests": s.equality_tests,
                         "symbol_comparisons": s.symbol_comparisons,
                         "memo_hits": s.memo_hits}
                  for name, s in (("preprocessing", pre), ("query", query))}
        report = {
            "input": {"n": text.n, "alphabet_size": text.alphabet_size, "mode": text.mode},
            "config": {"engine": args.engine, "t": args.t, "backend": _backend.BACKEND},
            "phases": phases,
            "totals": _add_phases(phases["preprocessing"], phases["query"]),
            "lce_queries": {"forward": result.forward_queries,
                            "backward": result.backward_queries,
                            "total": result.queries},
            "runs": [list(r) for r in result.runs],
            "answers": digest([x for r in result.runs for x in r]),
            "timings": {"total_s": round(elapsed, 6)},
        }
        _write_report(args.report, report)
    return 0


def _pairs(n: int, limit: int, seed: int):
    if n <= limit:
        return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    rng = random.Random(seed)
    return [(rng.randint(1, n), rng.randint(1, n)) for _ in range(VERIFY_SAMPLES)]


def cmd_verify(args, out) -> int:
    text = load_text(args.text, args.ints)
    symbols = text.symbols
    n = text.n
    pairs = _pairs(n, args.max_n, args.seed)
    checks = []
    for engine in ENGINES:
        for cover in COVERS:
            index = build_index(Text(symbols), engine=engine, cover=cover)
            checks.append((f"{engine}/{cover}", index.lce))
    unordered = build_index(Text(symbols, UNORDERED))
    checks.append(("unordered", unordered.lce_unordered))
    for i, j in pairs:
        expected = naive_lce(symbols, i, j)
        for name, query in checks:
            got = query(i, j)
            if got != expected:
                sys.stderr.write(f"mismatch at ({i}, {j}) [{name}]: "
                                 f"expected {expected}, got {got}\n")
                return 1
    if n <= RUNS_VERIFY_LIMIT:
        got_runs = compute_runs_detailed(Text(symbols)).runs
        want_runs = naive_runs(symbols)
        if got_runs != want_runs:
            missing = sorted(set(want_runs) - set(got_runs))
            extra = sorted(set(got_runs) - set(want_runs))
            sys.stderr.write(f"runs mismatch: missing {missing[:5]}, unexpected {extra[:5]}\n")
            return 1
    out.write(f"ok: {len(pairs)} pairs x {len(checks)} configurations, n={n}\n")
    return 0


def cmd_bench(args, out) -> int:
    symbols = generate(args.family, args.n, args.seed, args.sigma)
    text = Text(symbols, args.mode)
    queries = random_queries(args.n, args.q, args.seed)
    _, _, report = _run_batch(text, queries, args.engine, args.t, args.cover)
    report["input"]["family"] = args.family
    report["input"]["seed"] = args.seed
    report["input"]["q"] = args.q
    out.write(dump_report(report))
    _write_report(args.report, report)
    return 0


# ---------------------------------------------------------------- parser

def _index_flags(p: argparse.ArgumentParser, with_mode: bool = True) -> None:
    if with_mode:
        p.add_argument("--mode", choices=MODES, default=ORDERED)
    p.add_argument("--engine", choices=ENGINES, default="base4")
    p.add_argument("--t", type=int, default=None, help="block length, a power of 4")
    p.add_argument("--cover", choices=COVERS, default="difference")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genlce", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("query", help="answer a batch of LCE queries")
    p.add_argument("--text", required=True)
    p.add_argument("--ints", action="store_true",
                   help="text file holds whitespace-separated integers")
    p.add_argument("--queries", required=True, help='file of "i j" lines, 1-based')
    p.add_argument("--report", help="write a JSON report here")
    _index_flags(p)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("runs", help="list all runs")
    p.add_argument("--text", required=True)
    p.add_argument("--ints", action="store_true")
    p.add_argument("--report")
    p.add_argument("--engine", choices=ENGINES, default="base4")
    p.add_argument("--t", type=int, default=None)
    p.set_defaults(func=cmd_runs)

    p = sub.add_parser("verify", help="check every engine against brute force")
    p.add_argument("--text", required=True)
    p.add_argument("--ints", action="store_true")
    p.add_argument("--max-n", type=int, default=ALL_PAIRS_LIMIT,
                   help="check all pairs up to this length, sample above it")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="generate a text, run a batch, print the report")
    p.add_argument("--family", choices=FAMILIES, default="random")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sigma", type=int, default=4, help="alphabet size for random families")
    p.add_argument("--report")
    _index_flags(p)
    p.set_defaults(func=cmd_bench)
    return parser


def run_command(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (CliError, UsageError, QueryError, ValueError) as exc:
        sys.stderr.write(f"genlce: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()

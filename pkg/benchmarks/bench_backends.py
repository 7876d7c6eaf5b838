"""Time the compiled and pure-Python kernels on the same workloads.

Each (backend, workload) pair runs in a fresh interpreter because the kernel
is chosen once at import time. Answers and comparison counts must match
across backends; only wall-clock time may differ.

    python benchmarks/bench_backends.py --n 20000 --q 20000
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, time
from genlce import BACKEND, Text, build_index
from genlce.cli import digest, generate, random_queries
from genlce.runs import compute_runs_detailed

family, n, q, seed, engine, what = sys.argv[1:]
n, q, seed = int(n), int(q), int(seed)
text = Text(generate(family, n, seed))
started = time.perf_counter()
if what == "runs":
    result = compute_runs_detailed(text, engine=engine)
    answers = [x for r in result.runs for x in r]
    comparisons = (result.preprocessing + result.comparisons).symbol_comparisons
    built = started
else:
    index = build_index(text, engine=engine)
    built = time.perf_counter()
    batch = index.batch(random_queries(n, q, seed))
    answers = batch.answers
    comparisons = text.stats().symbol_comparisons
done = time.perf_counter()
print(json.dumps({"backend": BACKEND, "build_s": built - started, "total_s": done - started,
                  "comparisons": comparisons, "digest": digest(answers)["sha256"]}))
"""


def run_one(backend, args):
    env = dict(os.environ, GENLCE_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", WORKER, *map(str, args)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=20000)
    parser.add_argument("--q", type=int, default=20000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--runs-n", type=int, default=4000)
    opts = parser.parse_args()

    workloads = []
    for family in ("random", "periodic", "fibonacci", "thue-morse"):
        for engine in ("base4", "pow2"):
            workloads.append((family, opts.n, opts.q, opts.seed, engine, "lce"))
    workloads.append(("random", opts.runs_n, 0, opts.seed, "base4", "runs"))

    print(f"{'workload':<34}{'python s':>10}{'compiled s':>12}{'speedup':>9}  match")
    failed = False
    for w in workloads:
        py = run_one("python", w)
        c = run_one("compiled", w)
        if c["backend"] != "compiled":
            sys.exit("compiled kernel is not built; run `pip install -e .` first")
        same = py["digest"] == c["digest"] and py["comparisons"] == c["comparisons"]
        failed |= not same
        label = f"{w[5]} {w[0]} {w[4]} n={w[1]}"
        print(f"{label:<34}{py['total_s']:>10.3f}{c['total_s']:>12.3f}"
              f"{py['total_s'] / max(c['total_s'], 1e-9):>8.1f}x  {'yes' if same else 'NO'}")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()

"""Compare the compiled kernels against the pure-Python fallback.

Each backend runs in a fresh interpreter (``SNORTCGT_PURE=1`` selects the
fallback) so neither sees the other's memo tables.

    python benchmarks/bench_kernels.py [--graphs 40] [--max-n 12]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, random, sys, time
from snortcgt import kernels
from snortcgt.families import witness_position, make_caterpillar
from snortcgt.snort import Position, clear_memo, to_board, value

graphs, max_n = int(sys.argv[1]), int(sys.argv[2])
rng = random.Random(1)
boards = []
for _ in range(graphs):
    n = rng.randint(8, max_n)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3]
    boards.append(Position.build(range(n), edges))

out = {"backend": kernels.BACKEND}

t = time.perf_counter()
for p in boards:
    tints, adj = to_board(p)
    for _ in range(20):
        kernels.canonical_board(tints, adj)
out["canonical_board"] = time.perf_counter() - t

clear_memo()
t = time.perf_counter()
for p in boards:
    value(p)
out["random_values"] = time.perf_counter() - t

clear_memo()
t = time.perf_counter()
value(witness_position())
value(make_caterpillar(4))
out["witness_and_c545"] = time.perf_counter() - t
print(json.dumps(out))
"""


def run(pure: bool, graphs: int, max_n: int) -> dict:
    env = dict(os.environ)
    if pure:
        env["SNORTCGT_PURE"] = "1"
    else:
        env.pop("SNORTCGT_PURE", None)
    res = subprocess.run([sys.executable, "-c", WORKLOAD, str(graphs), str(max_n)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--graphs", type=int, default=40)
    ap.add_argument("--max-n", type=int, default=12)
    args = ap.parse_args()

    fast = run(False, args.graphs, args.max_n)
    slow = run(True, args.graphs, args.max_n)
    if fast["backend"] != "cython":
        print("compiled extension not available; both runs used the Python fallback")
    print(f"{'task':<18}{'compiled s':>12}{'python s':>12}{'speedup':>10}")
    for key in ("canonical_board", "random_values", "witness_and_c545"):
        a, b = fast[key], slow[key]
        print(f"{key:<18}{a:>12.3f}{b:>12.3f}{b / a:>9.1f}x")


if __name__ == "__main__":
    main()

"""Benchmark the assignment-scan kernels: compiled extension vs numpy.

Runs the classical-bound scan for built-in games on each available lane and
prints wall times plus the (identical) exact values.  The compiled lane is
skipped with a note when the extension was not built.
"""

import argparse
import time

from kspt import GameSpec, enumerate_contexts, load_builtin
from kspt.game import _context_tables
from kspt import scan


def bench_game(name: str, threads: int, repeats: int) -> None:
    vset, contexts = load_builtin(name)
    if contexts is None:
        contexts = enumerate_contexts(vset)
    spec = GameSpec(d=vset.dim, vset=vset, contexts=tuple(contexts))
    members, tables = _context_tables(spec)
    n = vset.n
    print(f"{name}: n={n} (2^{n} assignments), {len(contexts)} contexts, threads={threads}")
    lanes = ["numpy"] + (["compiled"] if scan.compiled_available() else [])
    if not scan.compiled_available():
        print("  compiled lane unavailable (extension not built); numpy only")
    results = {}
    for lane in lanes:
        best = None
        for _ in range(repeats):
            t0 = time.perf_counter()
            score, v, used = scan.best_assignment(members, tables, n, threads=threads, lane=lane)
            dt = time.perf_counter() - t0
            best = dt if best is None or dt < best else best
        results[lane] = (score, v)
        print(f"  {lane:>8}: {best:8.3f} s  best_total={score} best_v={v}")
    if len(results) == 2:
        assert results["numpy"] == results["compiled"], "lane results diverged"
        print("  lanes agree")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--games", nargs="+", default=["ceg18", "peres24"])
    parser.add_argument("--threads", type=int, default=4)
    parser.add_argument("--repeats", type=int, default=2)
    args = parser.parse_args()
    for name in args.games:
        bench_game(name, args.threads, args.repeats)


if __name__ == "__main__":
    main()

"""Compare the compiled and pure-Python counting kernels on corpus formulas.

    python benchmarks/bench_count.py [--groups S3,D4,Q8] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from formdiv.corpus import corpus
from formdiv.counting import BACKENDS, compile_formula, count_solutions, estimate_work
from formdiv.groups import load_group
from formdiv.verify import default_bindings


def best_of(repeat, fn):
    best, value = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t)
    return best, value


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", default="S3,D4,Q8,Z2xS3")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-work", type=int, default=200_000)
    args = ap.parse_args(argv)
    if "cython" not in BACKENDS:
        print("compiled kernel not built; only the Python backend is available")
        return 1

    totals = dict.fromkeys(BACKENDS, 0.0)
    mismatches = 0
    print(f"{'group':<8} {'formula':<50} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for name in args.groups.split(","):
        G = load_group(name)
        for phi in corpus():
            if estimate_work(phi, G) > args.max_work:
                continue
            program = compile_formula(phi)
            binding = default_bindings(program.constants, G, 0, limit=1, samples=1)[0]
            times, counts = {}, {}
            for backend in BACKENDS:
                times[backend], counts[backend] = best_of(
                    args.repeat,
                    lambda: count_solutions(phi, G, binding, backend=backend, program=program),
                )
                totals[backend] += times[backend]
            if len(set(counts.values())) != 1:
                mismatches += 1
            text = str(phi)
            text = text if len(text) <= 50 else text[:47] + "..."
            speed = times["python"] / max(times["cython"], 1e-9)
            print(f"{name:<8} {text:<50} {times['python']:>9.4f} {times['cython']:>9.4f} {speed:>7.1f}x")
    print(f"total python {totals['python']:.3f}s, cython {totals['cython']:.3f}s, "
          f"speedup {totals['python'] / max(totals['cython'], 1e-9):.1f}x")  # fmt: skip
    print(f"count mismatches: {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Benchmark: compiled selection kernel vs the pure-Python fallback.

Two measurements per instance size:
  engine-only  - drive GreedyEngine directly (best_single + apply loop),
                 which is the hot path the compiled kernel accelerates;
  end-to-end   - full weight_greedy including the exact rational
                 certification replay, which is kernel-independent work.

Usage: python benchmarks/compare_kernels.py [--sizes 60,120,200] [--d 8]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from twodom import kernels                                    # noqa: E402
from twodom.algorithms import _make_engine, weight_greedy     # noqa: E402
from twodom.coloring import ColoredState                      # noqa: E402
from twodom.graph import gen_random_regular                   # noqa: E402
from twodom.weights import builtin_coefficients               # noqa: E402


def drive_engine(module_name, g, c):
    made = _make_engine(g, c, ColoredState(g), module_name)
    engine, s_scaled = made
    t0 = time.perf_counter()
    while not engine.is_done():
        v, drop = engine.best_single()
        if drop >= s_scaled:
            engine.apply(v)
            continue
        p, q, pdrop = engine.best_pair()
        if p >= 0 and pdrop >= 2 * s_scaled:
            engine.apply(p)
            engine.apply(q)
            continue
        whites = engine.whites()
        for w in whites or [v]:
            engine.apply(w)
    return time.perf_counter() - t0


def end_to_end(kernel, g, c):
    t0 = time.perf_counter()
    weight_greedy(g, c, kernel=kernel, check_states=False)
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="60,120,200")
    parser.add_argument("--d", type=int, default=8)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    names = list(kernels.available())
    if "c" not in names:
        print("compiled kernel not built (python setup.py build_ext --inplace); "
              "benchmarking the fallback only")
    c = builtin_coefficients(args.d)
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"d={args.d}, kernels: {names}")
    header = f"{'n':>6} | " + " | ".join(f"{nm:>12}" for nm in names)
    for mode, runner in (("engine-only", drive_engine), ("end-to-end", end_to_end)):
        print(f"\n[{mode}]")
        print(header + (" |      speedup" if len(names) > 1 else ""))
        for n in sizes:
            if n * args.d % 2:
                n += 1
            g = gen_random_regular(n, args.d, args.seed)
            times = [runner(nm, g, c) for nm in names]
            row = f"{n:>6} | " + " | ".join(f"{t * 1000:>10.1f}ms" for t in times)
            if len(times) > 1:
                row += f" | {times[0] / times[1]:>10.1f}x"
            print(row)


if __name__ == "__main__":
    main()

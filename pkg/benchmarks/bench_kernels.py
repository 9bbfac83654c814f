"""Compare the compiled and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--max-n 12] [--repeat 3]

For each n it times the extension of a random basis table over all 3^n
words and an exhaustive sweep of a synthesized circuit, then checks that
both backends produced identical arrays.
"""

import argparse
import time

import numpy as np

from sbitlab import kernels
from sbitlab.circuit import synthesize
from sbitlab.core import all_words_array
from sbitlab.gates import random_basis_table


def best_of(repeat, fn):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=8)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sweep-max-n", type=int, default=10,
                    help="largest n for the circuit sweep (synthesized size grows as 2^n)")
    args = ap.parse_args()

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'kernel':<10}{'n':>4}{'rows':>10}" + "".join(f"{b + ' s':>14}" for b in backends) + f"{'speedup':>10}")
    for n in range(args.min_n, args.max_n + 1):
        t = random_basis_table(n, 2, seed=n, cap=None)
        basis = t.as_array()
        times, outs = {}, {}
        for name in backends:
            times[name], outs[name] = best_of(args.repeat, lambda: kernels.extension_table(basis, n, impl=name))
        _report("extension", n, times, outs)

        if n <= args.sweep_max_n:
            c = synthesize(random_basis_table(n, 1, seed=n, cap=None))
            words = all_words_array(n)
            times, outs = {}, {}
            for name in backends:
                times[name], outs[name] = best_of(args.repeat, lambda: kernels.run_netlist(words, c.program, impl=name))
            _report("sweep", n, times, outs)


def _report(kind, n, times, outs):
    ref = next(iter(outs.values()))
    assert all(np.array_equal(ref, o) for o in outs.values()), f"{kind} n={n}: backends disagree"
    speed = times["python"] / times["cython"] if "cython" in times else float("nan")
    cols = "".join(f"{t:>14.4f}" for t in times.values())
    print(f"{kind:<10}{n:>4}{3 ** n:>10}{cols}{speed:>9.1f}x")


if __name__ == "__main__":
    main()

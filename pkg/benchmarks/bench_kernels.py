"""Time the numba and numpy kernel backends against each other.

    python benchmarks/bench_kernels.py [--sieve N] [--primes P] [--repeat R]
"""
import argparse
import time

import numpy as np

from monosextic import _kernels
from monosextic.numtheory import small_primes


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sieve", type=int, default=10**7, help="squarefree table size")
    ap.add_argument("--primes", type=int, default=5000, help="primes per Frobenius batch")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    primes = np.array(small_primes()[: args.primes], dtype=np.int64)
    trinomials = [(1, 1), (9, 2), (-54, 1029), (123457, -98765)]

    # first calls pay the JIT cost; keep them out of the timings
    t0 = time.perf_counter()
    _kernels.squarefree_table(10, "numba")
    _kernels.frobenius_signatures(1, 1, primes[:4], "numba")
    print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.2f}s")

    print(f"{'kernel':<40}{'numba':>10}{'numpy':>10}{'speedup':>9}")
    t_nb, a = best_of(lambda: _kernels.squarefree_table(args.sieve, "numba"), args.repeat)
    t_np, b = best_of(lambda: _kernels.squarefree_table(args.sieve, "numpy"), args.repeat)
    assert np.array_equal(a, b)
    print(f"{f'squarefree_table({args.sieve:.0e})':<40}{t_nb:>9.3f}s{t_np:>9.3f}s{t_np / t_nb:>8.1f}x")

    for A, B in trinomials:
        ps = primes[np.array([(729 * B * B * (A * A - 4 * B) ** 3) % int(p) != 0 for p in primes])]
        t_nb, a = best_of(lambda: _kernels.frobenius_signatures(A, B, ps, "numba"), args.repeat)
        t_np, b = best_of(lambda: _kernels.frobenius_signatures(A, B, ps, "numpy"), args.repeat)
        assert np.array_equal(a, b)
        label = f"frobenius({A},{B}) x {len(ps)} primes"
        print(f"{label:<40}{t_nb:>9.3f}s{t_np:>9.3f}s{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()

"""Compare the compiled and pure-Python enumeration kernels.

Usage: python3 benchmarks/bench_enumeration.py [--repeat N]
"""

import argparse
import timeit

from qtop import _pykernel

try:
    from qtop import _ckernel
except ImportError:
    _ckernel = None


def best_ms(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat)) * 1000


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=7)
    args = parser.parse_args()

    if _ckernel is None:
        print("compiled kernel not available; showing pure Python only")

    print(f"{'n':>3} {'count':>7} {'python ms':>11} {'cython ms':>11} {'speedup':>9}")
    for n in range(6):
        count = _pykernel.count_topology_masks(n)
        py = best_ms(lambda: _pykernel.topology_masks(n), args.repeat)
        if _ckernel is not None:
            cy = best_ms(lambda: _ckernel.topology_masks(n), args.repeat)
            print(f"{n:>3} {count:>7} {py:>11.3f} {cy:>11.3f} {py / cy:>8.1f}x")
        else:
            print(f"{n:>3} {count:>7} {py:>11.3f} {'-':>11} {'-':>9}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Benchmark compiled vs pure-Python kernels on family-sized inputs.

Usage: python3 benchmarks/bench_kernels.py [--max-a 22]
"""

from __future__ import annotations

import argparse
import time

from lucasfrob import _purekern, build_S, lucas

try:
    from lucasfrob import _fastkern
except ImportError:
    _fastkern = None


def _time(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-a", type=int, default=22)
    args = parser.parse_args()

    if _fastkern is None:
        print("compiled kernels not available; showing pure-Python only")

    print(f"{'a':>4} {'n=l_a':>10} {'kernel':<8} {'pure (s)':>10} {'cython (s)':>11} {'speedup':>8}")
    for a in range(14, args.max_a + 1, 2):
        gens = build_S(a).generators
        n = lucas(a)
        for label, pure_fn, fast_fn, fargs in (
            ("apery", _purekern.apery, getattr(_fastkern, "apery", None), (n, gens)),
            ("sieve", _purekern.sieve, getattr(_fastkern, "sieve", None), (gens, -(-(a - 1) // 2) * n)),
        ):
            tp = _time(pure_fn, *fargs)
            if fast_fn is not None:
                tf = _time(fast_fn, *fargs)
                assert list(pure_fn(*fargs)) == list(fast_fn(*fargs))
                print(f"{a:>4} {n:>10} {label:<8} {tp:>10.4f} {tf:>11.4f} {tp / tf:>7.1f}x")
            else:
                print(f"{a:>4} {n:>10} {label:<8} {tp:>10.4f} {'-':>11} {'-':>8}")


if __name__ == "__main__":
    main()
